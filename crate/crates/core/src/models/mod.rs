//! Potentials, scattering eigenstates continued to complex `x`, and the
//! velocity fields they generate.

mod ahmed;
pub(crate) mod jet;
mod rect;
mod softstep;

pub use ahmed::{
    ahmed_R_standard, ahmed_T_standard, ahmed_params, ahmed_psi, AhmedParams, AhmedWave,
};
pub use rect::{rect_coefficients, rect_psi, rect_reflection, rect_transmission, RectCoefficients};
pub use softstep::{softstep_R_standard, softstep_psi, SoftStepParams};

/// Closed-form transmission of the rectangular barrier.
pub use rect::rect_transmission as rect_T_standard;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Cx;
use jet::{Jet, Order};

/// Relative size of `|ψ|` against `|ψ'|` (per unit length) below which a
/// point counts as sitting on a node.
pub const DEFAULT_NODE_GUARD: f64 = 1e-13;

const POLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalUnits {
    pub hbar: f64,
    pub mass: f64,
}

impl Default for PhysicalUnits {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BarrierKind {
    Rectangular,
    Ahmed,
    SoftStep,
}

impl BarrierKind {
    /// True for the models whose field repeats under `x -> x + 2πi a`.
    pub fn is_periodic(self) -> bool {
        !matches!(self, BarrierKind::Rectangular)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BarrierModel {
    pub kind: BarrierKind,
    pub v0: f64,
    pub a: f64,
    /// Ahmed asymmetry; ignored by the other models.
    pub c: f64,
    pub units: PhysicalUnits,
}

impl BarrierModel {
    pub fn rectangular(v0: f64, a: f64, units: PhysicalUnits) -> Self {
        Self {
            kind: BarrierKind::Rectangular,
            v0,
            a,
            c: 1.0,
            units,
        }
    }

    pub fn ahmed(v0: f64, a: f64, c: f64, units: PhysicalUnits) -> Self {
        Self {
            kind: BarrierKind::Ahmed,
            v0,
            a,
            c,
            units,
        }
    }

    pub fn soft_step(v0: f64, a: f64, units: PhysicalUnits) -> Self {
        Self {
            kind: BarrierKind::SoftStep,
            v0,
            a,
            c: 1.0,
            units,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidParameters(what.to_string()));
        if !(self.units.hbar > 0.0 && self.units.mass > 0.0) {
            return bad("hbar and mass must be positive");
        }
        if !(self.a > 0.0) || !self.a.is_finite() {
            return bad("a must be positive");
        }
        if !(self.v0 >= 0.0) || !self.v0.is_finite() {
            return bad("V0 must be non-negative");
        }
        if self.kind == BarrierKind::Ahmed && !(self.c > 0.0 && self.c <= 1.0) {
            return bad("c must lie in (0, 1]");
        }
        Ok(())
    }

    /// Imaginary period `2πa` of the smooth models, `None` for the
    /// rectangular barrier.
    pub fn period(&self) -> Option<f64> {
        self.kind
            .is_periodic()
            .then_some(2.0 * std::f64::consts::PI * self.a)
    }

    /// Real-axis extent outside which the potential is asymptotically flat.
    pub fn extent(&self) -> f64 {
        match self.kind {
            BarrierKind::Rectangular => self.a,
            _ => 10.0 * self.a,
        }
    }
}

/// `ψ` and `dψ/dx` at a complex point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveSample {
    pub psi: Cx,
    pub dpsi: Cx,
    pub x: Cx,
    pub energy: f64,
}

impl WaveSample {
    /// Multiply `ψ` (and `ψ'`) by a constant.
    pub fn scaled(self, factor: Cx) -> Self {
        Self {
            psi: self.psi * factor,
            dpsi: self.dpsi * factor,
            ..self
        }
    }
}

/// Analytically continued potential. The rectangular barrier assigns
/// `Re x = ±a` to the interior.
pub fn potential_at(model: &BarrierModel, x: Cx) -> Result<Cx> {
    let v0 = model.v0;
    match model.kind {
        BarrierKind::Rectangular => Ok(if x.re.abs() <= model.a {
            Cx::new(v0, 0.0)
        } else {
            Cx::new(0.0, 0.0)
        }),
        BarrierKind::Ahmed => {
            let e = (x / model.a).exp();
            let den = 1.0 + model.c * e;
            if den.norm() < POLE_TOL {
                return Err(Error::Pole(x));
            }
            let r = (1.0 - e) / den;
            Ok(v0 * (1.0 - r * r))
        }
        BarrierKind::SoftStep => {
            if x.re / model.a > 700.0 {
                return Ok(Cx::new(v0, 0.0));
            }
            let den = 1.0 + (x / model.a).exp();
            if den.norm() < POLE_TOL {
                return Err(Error::Pole(x));
            }
            Ok(v0 * (1.0 - 1.0 / den))
        }
    }
}

/// A scattering eigenstate of one model at one energy, ready to be sampled
/// anywhere off its singular set. The Ahmed state is the transmitted wave
/// `ψ_τ`, which is the one that drives trajectories.
#[derive(Debug, Clone, Copy)]
pub enum Eigenstate {
    Rect(BarrierModel, RectCoefficients),
    Ahmed(BarrierModel, AhmedParams, AhmedWave),
    SoftStep(BarrierModel, SoftStepParams),
}

impl Eigenstate {
    pub fn new(model: &BarrierModel, energy: f64) -> Result<Self> {
        model.validate()?;
        match model.kind {
            BarrierKind::Rectangular => Ok(Self::Rect(*model, rect_coefficients(energy, model)?)),
            BarrierKind::Ahmed => Ok(Self::Ahmed(
                *model,
                ahmed_params(energy, model)?,
                AhmedWave::Transmitted,
            )),
            BarrierKind::SoftStep => {
                Ok(Self::SoftStep(*model, SoftStepParams::new(energy, model)?))
            }
        }
    }

    /// Ahmed eigenstate of the chosen travelling component.
    pub fn ahmed_wave(model: &BarrierModel, energy: f64, which: AhmedWave) -> Result<Self> {
        model.validate()?;
        Ok(Self::Ahmed(*model, ahmed_params(energy, model)?, which))
    }

    pub fn model(&self) -> &BarrierModel {
        match self {
            Self::Rect(m, _) | Self::Ahmed(m, _, _) | Self::SoftStep(m, _) => m,
        }
    }

    pub fn energy(&self) -> f64 {
        match self {
            Self::Rect(_, c) => {
                let u = self.model().units;
                (u.hbar * c.k).powi(2) / (2.0 * u.mass)
            }
            Self::Ahmed(_, p, _) => p.energy,
            Self::SoftStep(_, p) => p.energy,
        }
    }

    pub(crate) fn jet(&self, x: Cx, order: Order) -> Result<Jet> {
        let j = match self {
            Self::Rect(_, c) => c.jet(x),
            Self::Ahmed(_, p, which) => ahmed::jet(*which, x, p, order)?,
            Self::SoftStep(_, p) => p.jet(x, order)?,
        };
        let finite = |z: Cx| z.re.is_finite() && z.im.is_finite();
        if !(finite(j.v) && finite(j.d1) && finite(j.d2)) {
            return Err(Error::Domain(format!(
                "wavefunction not representable at {x}"
            )));
        }
        Ok(j)
    }

    pub fn sample(&self, x: Cx) -> Result<WaveSample> {
        let j = self.jet(x, Order::First)?;
        Ok(WaveSample {
            psi: j.v,
            dpsi: j.d1,
            x,
            energy: self.energy(),
        })
    }

    pub fn psi(&self, x: Cx) -> Result<Cx> {
        Ok(self.jet(x, Order::Value)?.v)
    }

    /// `(ψ, ψ', ψ'')` at `x`.
    pub fn derivatives(&self, x: Cx) -> Result<[Cx; 3]> {
        let j = self.jet(x, Order::Second)?;
        Ok([j.v, j.d1, j.d2])
    }

    /// `-(ħ²/2m) ψ'' + (V - E) ψ`.
    pub fn schrodinger_residual(&self, x: Cx) -> Result<Cx> {
        let [psi, _, d2] = self.derivatives(x)?;
        let m = self.model();
        let u = m.units;
        let v = potential_at(m, x)?;
        Ok(-(u.hbar * u.hbar / (2.0 * u.mass)) * d2 + (v - self.energy()) * psi)
    }

    /// MdBB velocity at `x` with the default node guard.
    pub fn velocity(&self, x: Cx) -> Result<Cx> {
        mdbb_velocity(&self.sample(x)?, &self.model().units)
    }
}

/// Complex MdBB velocity `(ħ / i m) ψ'/ψ`.
pub fn mdbb_velocity(s: &WaveSample, units: &PhysicalUnits) -> Result<Cx> {
    mdbb_velocity_guarded(s, units, DEFAULT_NODE_GUARD)
}

pub fn mdbb_velocity_guarded(s: &WaveSample, units: &PhysicalUnits, guard: f64) -> Result<Cx> {
    let amp = s.psi.norm();
    if amp == 0.0 || amp <= guard * s.dpsi.norm() || !amp.is_finite() {
        return Err(Error::NodeProximity(s.x));
    }
    let ratio = s.dpsi / s.psi;
    Ok(Cx::new(0.0, -units.hbar / units.mass) * ratio)
}

/// Real de Broglie velocity `(ħ/m) Im(ψ'/ψ)` on the real axis.
pub fn dbb_velocity(s: &WaveSample, units: &PhysicalUnits) -> Result<f64> {
    if s.x.im != 0.0 {
        return Err(Error::Domain(format!(
            "dBB velocity needs real x, got {}",
            s.x
        )));
    }
    if s.psi.norm() == 0.0 {
        return Err(Error::NodeProximity(s.x));
    }
    Ok(units.hbar / units.mass * (s.dpsi / s.psi).im)
}
