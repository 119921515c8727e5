//! Rectangular barrier `V = V0` for `|x_r| <= a`, zero outside.

use serde::{Deserialize, Serialize};

use super::{jet::Jet, BarrierModel, WaveSample};
use crate::error::{Error, Result};
use crate::Cx;

/// `|E - V0| / V0` below which the interior is treated with the linear
/// `κ -> 0` solution `C + D x`.
const FLAT_TOL: f64 = 1e-9;

/// Plane-wave amplitudes of the three regions with `A = 1`:
///
/// ```text
/// x_r < -a : A e^{ikx} + B e^{-ikx}
/// |x_r| <= a : C e^{-κx} + D e^{κx}     (C + D x when κ = 0)
/// x_r > a  : F e^{ikx}
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectCoefficients {
    pub a: Cx,
    pub b: Cx,
    pub c: Cx,
    pub d: Cx,
    pub f: Cx,
    pub k: f64,
    /// `√(2m(V0 - E))/ħ`, purely imaginary above the barrier and exactly
    /// zero on the linear branch.
    pub kappa: Cx,
    pub half_width: f64,
}

impl RectCoefficients {
    pub fn transmission(&self) -> f64 {
        self.f.norm_sqr() / self.a.norm_sqr()
    }

    pub fn reflection(&self) -> f64 {
        self.b.norm_sqr() / self.a.norm_sqr()
    }

    fn is_linear(&self) -> bool {
        self.kappa.norm() == 0.0
    }

    /// Interior basis functions `(u1, u2)` as jets at `x`.
    fn interior_basis(&self, x: Cx) -> (Jet, Jet) {
        if self.is_linear() {
            let zero = Cx::new(0.0, 0.0);
            (
                Jet::new(Cx::new(1.0, 0.0), zero, zero),
                Jet::new(x, Cx::new(1.0, 0.0), zero),
            )
        } else {
            let kap = self.kappa;
            (
                Jet::exponential((-kap * x).exp(), -kap),
                Jet::exponential((kap * x).exp(), kap),
            )
        }
    }

    pub(crate) fn jet(&self, x: Cx) -> Jet {
        let ik = Cx::new(0.0, self.k);
        let w = self.half_width;
        if x.re < -w {
            let inc = Jet::exponential((ik * x).exp(), ik) * self.a;
            let refl = Jet::exponential((-ik * x).exp(), -ik) * self.b;
            Jet::new(inc.v + refl.v, inc.d1 + refl.d1, inc.d2 + refl.d2)
        } else if x.re > w {
            Jet::exponential((ik * x).exp(), ik) * self.f
        } else {
            let (u1, u2) = self.interior_basis(x);
            let (u1, u2) = (u1 * self.c, u2 * self.d);
            Jet::new(u1.v + u2.v, u1.d1 + u2.d1, u1.d2 + u2.d2)
        }
    }
}

fn rect_numbers(energy: f64, model: &BarrierModel) -> Result<(f64, Cx)> {
    if !(energy > 0.0) || !energy.is_finite() {
        return Err(Error::InvalidParameters(format!(
            "energy must be positive, got {energy}"
        )));
    }
    let u = model.units;
    let k = (2.0 * u.mass * energy).sqrt() / u.hbar;
    let kappa = if model.v0 > 0.0 && ((energy - model.v0) / model.v0).abs() < FLAT_TOL {
        Cx::new(0.0, 0.0)
    } else {
        Cx::new(2.0 * u.mass * (model.v0 - energy), 0.0).sqrt() / u.hbar
    };
    Ok((k, kappa))
}

/// Solve the four matching conditions at `x = ±a` with `A = 1`.
pub fn rect_coefficients(energy: f64, model: &BarrierModel) -> Result<RectCoefficients> {
    let (k, kappa) = rect_numbers(energy, model)?;
    let w = model.a;
    let ik = Cx::new(0.0, k);
    let mut coeffs = RectCoefficients {
        a: Cx::new(1.0, 0.0),
        b: Cx::new(0.0, 0.0),
        c: Cx::new(0.0, 0.0),
        d: Cx::new(0.0, 0.0),
        f: Cx::new(0.0, 0.0),
        k,
        kappa,
        half_width: w,
    };
    let left = Cx::new(-w, 0.0);
    let right = Cx::new(w, 0.0);
    let (u1l, u2l) = coeffs.interior_basis(left);
    let (u1r, u2r) = coeffs.interior_basis(right);
    let el_m = (-ik * left).exp();
    let el_p = (ik * left).exp();
    let er = (ik * right).exp();
    let zero = Cx::new(0.0, 0.0);
    // unknowns: B, C, D, F
    let mut m = [
        [el_m, -u1l.v, -u2l.v, zero, -el_p],
        [-ik * el_m, -u1l.d1, -u2l.d1, zero, -ik * el_p],
        [zero, u1r.v, u2r.v, -er, zero],
        [zero, u1r.d1, u2r.d1, -ik * er, zero],
    ];
    let sol = solve4(&mut m)?;
    coeffs.b = sol[0];
    coeffs.c = sol[1];
    coeffs.d = sol[2];
    coeffs.f = sol[3];
    Ok(coeffs)
}

/// Gaussian elimination with partial pivoting on an augmented 4x5 system.
fn solve4(m: &mut [[Cx; 5]; 4]) -> Result<[Cx; 4]> {
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .unwrap_or(col);
        if m[pivot][col].norm() == 0.0 {
            return Err(Error::Domain("singular matching system".into()));
        }
        m.swap(col, pivot);
        for row in col + 1..4 {
            let factor = m[row][col] / m[col][col];
            #[allow(clippy::needless_range_loop)]
            for j in col..5 {
                let v = m[col][j];
                m[row][j] -= factor * v;
            }
        }
    }
    let mut x = [Cx::new(0.0, 0.0); 4];
    for row in (0..4).rev() {
        let mut acc = m[row][4];
        for j in row + 1..4 {
            acc -= m[row][j] * x[j];
        }
        x[row] = acc / m[row][row];
    }
    Ok(x)
}

/// Closed-form transmission `1 / (1 + [1 + ε²/4] sinh²(2κa))` with
/// `ε = κ/k - k/κ`, continued to imaginary `κ` above the barrier and to its
/// `κ -> 0` limit `1 / (1 + k²a²)` at `E = V0`.
pub fn rect_transmission(energy: f64, model: &BarrierModel) -> Result<f64> {
    let (k, kappa) = rect_numbers(energy, model)?;
    if model.v0 == 0.0 {
        return Ok(1.0);
    }
    let a = model.a;
    if kappa.norm() == 0.0 {
        return Ok(1.0 / (1.0 + k * k * a * a));
    }
    let kc = Cx::new(k, 0.0);
    let eps = kappa / kc - kc / kappa;
    let sh = (2.0 * kappa * a).sinh();
    let t = 1.0 / (1.0 + (1.0 + eps * eps / 4.0) * sh * sh);
    Ok(t.re)
}

pub fn rect_reflection(energy: f64, model: &BarrierModel) -> Result<f64> {
    Ok(1.0 - rect_transmission(energy, model)?)
}

/// Wavefunction sample of the region containing `Re x`.
pub fn rect_psi(x: Cx, energy: f64, coeffs: &RectCoefficients) -> WaveSample {
    let j = coeffs.jet(x);
    WaveSample {
        psi: j.v,
        dpsi: j.d1,
        x,
        energy,
    }
}
