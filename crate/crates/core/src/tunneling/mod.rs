//! Reflection probability from the complex-extended density `|ψ|²`
//! integrated along the vertical line through a node, above and below it.

pub mod quadrature;

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::{
    ahmed_R_standard, rect_reflection, softstep_R_standard, BarrierKind, BarrierModel, Eigenstate,
};
use crate::spectral::{locate_pole, PoleLocation, PoleSearch};
use crate::Cx;
use quadrature::{integrate, QuadOptions};

/// Default half-length of the integration line for non-periodic models.
pub const DEFAULT_LAMBDA: f64 = 50.0;

/// Beyond this `|x_i|` the rectangular incident-side density is taken from
/// its three-term expansion.
const EXPANSION_XI: f64 = 20.0;

/// `|ψ(x)|²` at complex `x`.
pub fn extended_density(x: Cx, energy: f64, model: &BarrierModel) -> Result<f64> {
    density(&Eigenstate::new(model, energy)?, x)
}

fn density(state: &Eigenstate, x: Cx) -> Result<f64> {
    if let Eigenstate::Rect(m, c) = state {
        if x.re < -m.a && x.im.abs() > EXPANSION_XI {
            // |A|² e^{-2k x_i} + |B|² e^{2k x_i} + 2 Re(A B̄ e^{2ikα})
            let k = c.k;
            let cross = c.a * c.b.conj() * Cx::from_polar(1.0, 2.0 * k * x.re);
            return Ok(c.a.norm_sqr() * (-2.0 * k * x.im).exp()
                + c.b.norm_sqr() * (2.0 * k * x.im).exp()
                + 2.0 * cross.re);
        }
    }
    Ok(state.psi(x)?.norm_sqr())
}

/// Ansatz ratio with its propagated quadrature error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnsatzValue {
    pub r: f64,
    pub error: f64,
}

fn ratio(
    state: &Eigenstate,
    alpha: f64,
    (lo, beta, hi): (f64, f64, f64),
    opts: &QuadOptions,
) -> Result<AnsatzValue> {
    let f = |xi: f64| density(state, Cx::new(alpha, xi));
    let up = integrate(f, beta, hi, opts)?;
    let down = integrate(f, lo, beta, opts)?;
    if !(down.value > 0.0) {
        return Err(Error::QuadratureFailure(format!(
            "incident-side integral vanished on Re x = {alpha}"
        )));
    }
    let r = up.value / down.value;
    let error = r * (up.error / up.value.abs().max(f64::MIN_POSITIVE) + down.error / down.value);
    Ok(AnsatzValue { r, error })
}

/// `∫_β^Λ |ψ|² dx_i / ∫_{−Λ}^β |ψ|² dx_i` on `Re x = α`.
pub fn reflection_ansatz_unbounded(
    energy: f64,
    model: &BarrierModel,
    pole: &PoleLocation,
    lambda: f64,
) -> Result<f64> {
    let state = Eigenstate::new(model, energy)?;
    Ok(unbounded(&state, pole, lambda, &QuadOptions::default())?.r)
}

fn unbounded(
    state: &Eigenstate,
    pole: &PoleLocation,
    lambda: f64,
    opts: &QuadOptions,
) -> Result<AnsatzValue> {
    let model = state.model();
    if model.kind.is_periodic() {
        return Err(Error::InvalidParameters(
            "the unbounded line needs a non-periodic model".into(),
        ));
    }
    if !(lambda > pole.beta.abs() + 1.0) {
        return Err(Error::InvalidParameters(format!(
            "lambda = {lambda} must exceed |beta| + 1"
        )));
    }
    let u = model.units;
    let k = (2.0 * u.mass * state.energy()).sqrt() / u.hbar;
    if 2.0 * k * lambda >= 700.0 {
        return Err(Error::InvalidParameters(format!(
            "2 k lambda = {} overflows the density",
            2.0 * k * lambda
        )));
    }
    ratio(state, pole.alpha, (-lambda, pole.beta, lambda), opts)
}

/// `∫_β^L |ψ|² dx_i / ∫_{−L}^β |ψ|² dx_i` on `Re x = α` with `L = πa`.
pub fn reflection_ansatz_periodic(
    energy: f64,
    model: &BarrierModel,
    pole: &PoleLocation,
) -> Result<f64> {
    let state = Eigenstate::new(model, energy)?;
    Ok(periodic(&state, pole, &QuadOptions::default())?.r)
}

fn periodic(state: &Eigenstate, pole: &PoleLocation, opts: &QuadOptions) -> Result<AnsatzValue> {
    let model = state.model();
    if !model.kind.is_periodic() {
        return Err(Error::InvalidParameters(
            "the periodic line needs the Ahmed or soft-step model".into(),
        ));
    }
    let l = PI * model.a;
    if !(pole.beta > -l && pole.beta < l) {
        return Err(Error::BetaOutOfPeriod {
            beta: pole.beta,
            half_period: l,
        });
    }
    ratio(state, pole.alpha, (-l, pole.beta, l), opts)
}

/// The ansatz for either model family with explicit quadrature settings.
pub fn reflection_ansatz(
    state: &Eigenstate,
    pole: &PoleLocation,
    lambda: f64,
    opts: &QuadOptions,
) -> Result<AnsatzValue> {
    if state.model().kind.is_periodic() {
        periodic(state, pole, opts)
    } else {
        unbounded(state, pole, lambda, opts)
    }
}

/// Exact reflection probability of the model.
#[allow(non_snake_case)]
pub fn R_standard(energy: f64, model: &BarrierModel) -> Result<f64> {
    match model.kind {
        BarrierKind::Rectangular => rect_reflection(energy, model),
        BarrierKind::Ahmed => Ok(ahmed_R_standard(&crate::models::ahmed_params(
            energy, model,
        )?)),
        BarrierKind::SoftStep => softstep_R_standard(energy, model),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct ReflectionRecord {
    #[serde(rename = "E")]
    pub energy: f64,
    pub pole: PoleLocation,
    pub R_ansatz: f64,
    pub R_standard: f64,
    pub deviation: f64,
    pub lambda_or_L: f64,
    pub quadrature_error_estimate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub lambda: f64,
    pub quad_tol: f64,
    pub pole: PoleSearch,
}

impl SweepConfig {
    pub fn default_for(model: &BarrierModel) -> Self {
        Self {
            lambda: DEFAULT_LAMBDA,
            quad_tol: 1e-10,
            pole: PoleSearch::default_for(model),
        }
    }
}

/// Pole search, ansatz and reference at one energy.
pub fn reflection_record(
    energy: f64,
    model: &BarrierModel,
    config: &SweepConfig,
) -> Result<ReflectionRecord> {
    let state = Eigenstate::new(model, energy)?;
    let pole = locate_pole(&state, &config.pole)?;
    let opts = QuadOptions {
        rel_tol: config.quad_tol,
        ..QuadOptions::default()
    };
    let ansatz = reflection_ansatz(&state, &pole, config.lambda, &opts)?;
    let standard = R_standard(energy, model)?;
    let lambda_or_l = if model.kind.is_periodic() {
        PI * model.a
    } else {
        config.lambda
    };
    Ok(ReflectionRecord {
        energy,
        pole,
        R_ansatz: ansatz.r,
        R_standard: standard,
        deviation: ansatz.r - standard,
        lambda_or_L: lambda_or_l,
        quadrature_error_estimate: ansatz.error,
    })
}

/// One record per energy, in input order. A failed energy keeps its error.
/// Energies are evaluated in parallel on the current rayon pool.
pub fn deviation_sweep(
    model: &BarrierModel,
    energies: &[f64],
    config: &SweepConfig,
) -> Vec<(f64, Result<ReflectionRecord>)> {
    energies
        .par_iter()
        .map(|&e| (e, reflection_record(e, model, config)))
        .collect()
}
