//! Dormand–Prince 5(4) stepper for an autonomous complex ODE `x' = f(x)`.

use crate::Cx;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// fifth minus fourth order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

/// One accepted or rejected trial step.
pub struct Trial {
    pub x: Cx,
    /// `f` at the new point (first stage of the next step).
    pub f: Cx,
    /// Error norm relative to the tolerance; accept when `<= 1`.
    pub err: f64,
}

/// Trial step of size `h` from `x` with `f0 = f(x)`.
pub fn trial<F, E>(f: &mut F, x: Cx, f0: Cx, h: f64, rtol: f64, atol: f64) -> Result<Trial, E>
where
    F: FnMut(Cx) -> Result<Cx, E>,
{
    let k1 = f0;
    let k2 = f(x + h * A21 * k1)?;
    let k3 = f(x + h * (A31 * k1 + A32 * k2))?;
    let k4 = f(x + h * (A41 * k1 + A42 * k2 + A43 * k3))?;
    let k5 = f(x + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4))?;
    let k6 = f(x + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5))?;
    let xn = x + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
    let k7 = f(xn)?;
    let e = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
    let scale = atol + rtol * x.norm().max(xn.norm());
    let err = (e.re / scale).hypot(e.im / scale) / std::f64::consts::SQRT_2;
    Ok(Trial { x: xn, f: k7, err })
}

/// Step-size factor after a trial with error norm `err`.
pub fn next_factor(err: f64) -> f64 {
    if err == 0.0 {
        return 5.0;
    }
    (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
}

/// Cubic Hermite interpolant on a step from `(x0, f0)` to `(x1, f1)` of
/// size `h`, at fraction `s ∈ [0, 1]`.
pub fn hermite(x0: Cx, f0: Cx, x1: Cx, f1: Cx, h: f64, s: f64) -> Cx {
    let s2 = s * s;
    let s3 = s2 * s;
    let h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    let h10 = s3 - 2.0 * s2 + s;
    let h01 = -2.0 * s3 + 3.0 * s2;
    let h11 = s3 - s2;
    h00 * x0 + h10 * h * f0 + h01 * x1 + h11 * h * f1
}
