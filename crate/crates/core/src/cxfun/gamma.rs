use std::f64::consts::PI;

use super::{near_nonpositive_integer, principal_ln};
use crate::error::{Error, Result};
use crate::Cx;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// `ln sin(πz)` that stays finite for large `|Im z|`, where `sin(πz)`
/// itself would overflow. Only defined modulo `2πi`.
fn ln_sin_pi(z: Cx) -> Cx {
    let i = Cx::new(0.0, 1.0);
    if z.im.abs() < 8.0 {
        return principal_ln((z * PI).sin());
    }
    if z.im > 0.0 {
        // sin(πz) = e^{-iπz} (1 - e^{2iπz}) (i/2)
        let e = (i * 2.0 * PI * z).exp();
        -i * PI * z + principal_ln(Cx::new(1.0, 0.0) - e) + principal_ln(i * 0.5)
    } else {
        let e = (-i * 2.0 * PI * z).exp();
        i * PI * z + principal_ln(Cx::new(1.0, 0.0) - e) + principal_ln(-i * 0.5)
    }
}

/// Complex log-Gamma via the Lanczos approximation (g = 7, nine terms),
/// with the reflection formula for `Re z < 1/2`.
///
/// The imaginary part is only meaningful modulo `2π`; callers exponentiate
/// sums of these values, so the branch of the logarithm never matters.
pub fn lgamma_cx(z: Cx) -> Result<Cx> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("lgamma of non-finite {z}")));
    }
    if near_nonpositive_integer(z, 1e-12) {
        return Err(Error::Pole(z));
    }
    if z.re < 0.5 {
        let one = Cx::new(1.0, 0.0);
        return Ok(Cx::new(PI.ln(), 0.0) - ln_sin_pi(z) - lanczos(one - z));
    }
    Ok(lanczos(z))
}

fn lanczos(z: Cx) -> Cx {
    let z = z - 1.0;
    let mut acc = Cx::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &coef) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += coef / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Cx::new(HALF_LN_TWO_PI, 0.0) + (z + 0.5) * principal_ln(t) - t + principal_ln(acc)
}

/// `Γ(z)` as `exp(lgamma_cx(z))`.
pub fn gamma_cx(z: Cx) -> Result<Cx> {
    Ok(lgamma_cx(z)?.exp())
}
