//! The Ahmed family `V = V0 {1 - [(1 - e^{x/a}) / (1 + c e^{x/a})]²}`,
//! solved through `z = -c e^{x/a}`.
//!
//! `(-z)^λ` is evaluated as `exp(λ (ln c + x/a))` with the imaginary part
//! of `x/a` folded into `(-π, π]`, which is the principal branch of
//! `(c e^{x/a})^λ`. This makes every factor exactly `2πi a`-periodic and
//! puts the field discontinuity on the lines `x_i = ±πa`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::jet::{hyp2f1_derivatives, Jet, Order};
use super::{BarrierKind, BarrierModel, WaveSample};
use crate::cxfun::Hyp2F1Params;
use crate::error::{Error, Result};
use crate::Cx;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AhmedWave {
    Incident,
    Reflected,
    Transmitted,
}

/// Dimensionless numbers of the Ahmed eigenstate at one energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AhmedParams {
    pub b: f64,
    pub f: f64,
    pub q: f64,
    pub s: f64,
    pub g: f64,
    pub k: f64,
    pub kprime: f64,
    pub c: f64,
    pub a: f64,
    /// `ħ²/(2ma²)`.
    pub delta: f64,
    pub energy: f64,
}

impl AhmedParams {
    /// `z = -c e^{x/a}`.
    pub fn z_of_x(&self, x: Cx) -> Cx {
        -self.c * (x / self.a).exp()
    }

    /// `ln(-z)` on the principal branch.
    fn ln_minus_z(&self, x: Cx) -> Cx {
        let t = x / self.a;
        let mut im = t.im - 2.0 * PI * (t.im / (2.0 * PI)).round();
        if im <= -PI {
            im += 2.0 * PI;
        }
        Cx::new(self.c.ln() + t.re, im)
    }
}

pub fn ahmed_params(energy: f64, model: &BarrierModel) -> Result<AhmedParams> {
    if model.kind != BarrierKind::Ahmed {
        return Err(Error::InvalidParameters("not an Ahmed model".into()));
    }
    if !(energy > 0.0) || !energy.is_finite() {
        return Err(Error::InvalidParameters(format!(
            "energy must be positive, got {energy}"
        )));
    }
    let u = model.units;
    let a = model.a;
    let c = model.c;
    let b = 1.0 / c;
    let delta = u.hbar * u.hbar / (2.0 * u.mass * a * a);
    let f2 = energy / delta;
    let q2 = model.v0 / delta;
    let g2 = q2 * (b + 1.0).powi(2) - 0.25;
    if !(g2 > 0.0) {
        return Err(Error::InvalidParameters(format!(
            "q²(b+1)² must exceed 1/4, got {}",
            g2 + 0.25
        )));
    }
    let s2 = f2 + (b * b - 1.0) * q2;
    let kp2 = 2.0 * u.mass * (energy + (b * b - 1.0) * model.v0);
    Ok(AhmedParams {
        b,
        f: f2.sqrt(),
        q: q2.sqrt(),
        s: s2.sqrt(),
        g: g2.sqrt(),
        k: (2.0 * u.mass * energy).sqrt() / u.hbar,
        kprime: kp2.sqrt() / u.hbar,
        c,
        a,
        delta,
        energy,
    })
}

pub(crate) fn jet(which: AhmedWave, x: Cx, p: &AhmedParams, order: Order) -> Result<Jet> {
    let i = Cx::new(0.0, 1.0);
    let half = Cx::new(0.5, 0.0);
    let one = Cx::new(1.0, 0.0);
    let (f, s, g, a) = (p.f, p.s, p.g, p.a);
    let ln_mz = p.ln_minus_z(x);
    let mz = ln_mz.exp();
    if (one + mz).norm() < 1e-12 {
        return Err(Error::Pole(x));
    }
    let mz_pow = |lam: Cx| Jet::exponential((lam * ln_mz).exp(), lam / a);
    let one_minus_z = Jet::new(one + mz, mz / a, mz / (a * a));
    match which {
        AhmedWave::Transmitted => {
            let pref = Cx::new((2.0 * s).powf(-0.5) * (-PI * f).exp(), 0.0);
            let w = one / (one + mz);
            let cw = mz / (one + mz);
            let dw = -w * cw / a;
            let w_jet = Jet::new(w, dw, -(one - 2.0 * w) * dw / a);
            let hp = Hyp2F1Params::with_complement(
                half - i * (f + g + s),
                half - i * (f - g + s),
                one - 2.0 * i * s,
                w,
                cw,
            );
            let hyp = Jet::compose(hyp2f1_derivatives(hp, order)?, w_jet);
            let jet = mz_pow(-i * f) * one_minus_z.powc(i * (s + f))? * hyp;
            Ok(jet * pref)
        }
        AhmedWave::Incident | AhmedWave::Reflected => {
            let sign = if which == AhmedWave::Incident {
                1.0
            } else {
                -1.0
            };
            let pref = Cx::new((2.0 * f).powf(-0.5) * (-sign * PI * f).exp(), 0.0);
            let z = -mz;
            let z_jet = Jet::new(z, z / a, z / (a * a));
            let hp = Hyp2F1Params::with_complement(
                half + i * (sign * f - g - s),
                half + i * (sign * f - g + s),
                one + 2.0 * i * sign * f,
                z,
                one + mz,
            );
            let hyp = Jet::compose(hyp2f1_derivatives(hp, order)?, z_jet);
            let jet = mz_pow(i * sign * f) * one_minus_z.powc(half - i * g)? * hyp;
            Ok(jet * pref)
        }
    }
}

/// One travelling component of the Ahmed eigenstate at `x`.
pub fn ahmed_psi(which: AhmedWave, x: Cx, p: &AhmedParams) -> Result<WaveSample> {
    let j = jet(which, x, p, Order::First)?;
    Ok(WaveSample {
        psi: j.v,
        dpsi: j.d1,
        x,
        energy: p.energy,
    })
}

fn ln_cosh(x: f64) -> f64 {
    let ax = x.abs();
    ax + (-2.0 * ax).exp().ln_1p() - std::f64::consts::LN_2
}

fn ln_sinh(x: f64) -> f64 {
    x + (-(-2.0 * x).exp_m1()).ln() - std::f64::consts::LN_2
}

fn ln_denominator(p: &AhmedParams) -> f64 {
    ln_cosh(PI * (p.f + p.s + p.g)) + ln_cosh(PI * (p.f + p.s - p.g))
}

/// Standard reflection probability, evaluated in log space.
#[allow(non_snake_case)]
pub fn ahmed_R_standard(p: &AhmedParams) -> f64 {
    let num = ln_cosh(PI * (p.f + p.g - p.s)) + ln_cosh(PI * (p.f - p.g - p.s));
    (num - ln_denominator(p)).exp()
}

/// Standard transmission probability, evaluated in log space.
#[allow(non_snake_case)]
pub fn ahmed_T_standard(p: &AhmedParams) -> f64 {
    if p.f == 0.0 {
        return 0.0;
    }
    let num = ln_sinh(2.0 * PI * p.f) + ln_sinh(2.0 * PI * p.s);
    (num - ln_denominator(p)).exp()
}
