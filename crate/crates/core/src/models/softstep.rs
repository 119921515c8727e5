//! Soft step `V = (V0/2)(1 + tanh(x/2a)) = V0 (1 - y)`, `y = 1/(1 + e^{x/a})`.
//!
//! The eigenstate is `u = y^ν (1-y)^μ ₂F₁(μ+ν, μ+ν+1; 2ν+1; y)` with
//! `ν = -ik'a` above the step (outgoing on the right), `ν = +|ν|` below it
//! (decaying), and `μ = -ika`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::jet::{hyp2f1_derivatives, Jet, Order};
use super::{BarrierKind, BarrierModel, WaveSample};
use crate::cxfun::Hyp2F1Params;
use crate::error::{Error, Result};
use crate::Cx;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SoftStepParams {
    pub nu: Cx,
    pub mu: Cx,
    pub k: f64,
    /// `√(2m|E - V0|)/ħ`; a decay rate below the step.
    pub kprime: f64,
    pub a: f64,
    pub energy: f64,
}

impl SoftStepParams {
    pub fn new(energy: f64, model: &BarrierModel) -> Result<Self> {
        if model.kind != BarrierKind::SoftStep {
            return Err(Error::InvalidParameters("not a soft-step model".into()));
        }
        if !(energy > 0.0) || !energy.is_finite() {
            return Err(Error::InvalidParameters(format!(
                "energy must be positive, got {energy}"
            )));
        }
        let u = model.units;
        let a = model.a;
        let k = (2.0 * u.mass * energy).sqrt() / u.hbar;
        let kprime = (2.0 * u.mass * (energy - model.v0).abs()).sqrt() / u.hbar;
        let nu = if energy >= model.v0 {
            Cx::new(0.0, -kprime * a)
        } else {
            Cx::new(kprime * a, 0.0)
        };
        Ok(Self {
            nu,
            mu: Cx::new(0.0, -k * a),
            k,
            kprime,
            a,
            energy,
        })
    }

    /// `(y, 1 - y)` without overflow for large `|x_r|`.
    fn y_pair(&self, x: Cx) -> (Cx, Cx) {
        let t = x / self.a;
        let one = Cx::new(1.0, 0.0);
        if t.re > 0.0 {
            let e = (-t).exp();
            (e / (one + e), one / (one + e))
        } else {
            let e = t.exp();
            (one / (one + e), e / (one + e))
        }
    }

    pub(crate) fn jet(&self, x: Cx, order: Order) -> Result<Jet> {
        let (y, ym) = self.y_pair(x);
        if !(y.norm().is_finite() && ym.norm().is_finite()) {
            return Err(Error::Pole(x));
        }
        let a = self.a;
        let dy = -y * ym / a;
        let d2y = -(1.0 - 2.0 * y) * dy / a;
        let y_jet = Jet::new(y, dy, d2y);
        let ym_jet = Jet::new(ym, -dy, -d2y);
        let (mu, nu) = (self.mu, self.nu);
        let one = Cx::new(1.0, 0.0);
        let hp = Hyp2F1Params::with_complement(mu + nu, mu + nu + one, 2.0 * nu + one, y, ym);
        let hyp = Jet::compose(hyp2f1_derivatives(hp, order)?, y_jet);
        Ok(y_jet.powc(nu)? * ym_jet.powc(mu)? * hyp)
    }
}

/// Soft-step eigenstate at `x` (overall constant `C = 1`).
pub fn softstep_psi(x: Cx, energy: f64, model: &BarrierModel) -> Result<WaveSample> {
    let p = SoftStepParams::new(energy, model)?;
    let j = p.jet(x, Order::First)?;
    Ok(WaveSample {
        psi: j.v,
        dpsi: j.d1,
        x,
        energy,
    })
}

fn ln_sinh_abs(x: f64) -> f64 {
    let ax = x.abs();
    ax + (-(-2.0 * ax).exp_m1()).ln() - std::f64::consts::LN_2
}

/// `[sinh(πa(k - k')) / sinh(πa(k + k'))]²` above the step, `1` below.
#[allow(non_snake_case)]
pub fn softstep_R_standard(energy: f64, model: &BarrierModel) -> Result<f64> {
    let p = SoftStepParams::new(energy, model)?;
    if energy <= model.v0 {
        return Ok(1.0);
    }
    let diff = PI * p.a * (p.k - p.kprime);
    if diff == 0.0 {
        return Ok(0.0);
    }
    let sum = PI * p.a * (p.k + p.kprime);
    Ok((2.0 * (ln_sinh_abs(diff) - ln_sinh_abs(sum))).exp())
}
