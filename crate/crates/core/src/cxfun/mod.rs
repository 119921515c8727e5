//! Complex special functions: principal-branch powers, log-Gamma and the
//! Gauss hypergeometric function.
//!
//! Everything here works on the principal branch, `-π < Arg z <= π`. The
//! negative real axis is the cut of `ppow` and of the logarithm; values on
//! the cut are taken from above.

mod gamma;
mod hyp2f1;

pub use gamma::{gamma_cx, lgamma_cx};
pub use hyp2f1::{hyp2f1, hyp2f1_d2w, hyp2f1_diag, hyp2f1_dw, hyp2f1_route, Hyp2F1Params, Route};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::Cx;

/// Principal argument with the cut value taken from above, so that a
/// negative real number (including one carrying a signed `-0.0` imaginary
/// part) always gets `+π`.
#[inline]
pub fn principal_arg(z: Cx) -> f64 {
    if z.im == 0.0 && z.re < 0.0 {
        PI
    } else {
        z.im.atan2(z.re)
    }
}

/// Principal logarithm `ln|z| + i Arg z`.
#[inline]
pub fn principal_ln(z: Cx) -> Cx {
    Cx::new(z.norm().ln(), principal_arg(z))
}

/// Principal-branch power `z^s = exp(s (ln|z| + i Arg z))`.
///
/// At `z = 0` the limit is returned where it exists: `1` for `s = 0` and
/// `0` for `Re s > 0`. Any other exponent at the origin is a domain error.
pub fn ppow(z: Cx, s: Cx) -> Result<Cx> {
    if z.re == 0.0 && z.im == 0.0 {
        if s.re == 0.0 && s.im == 0.0 {
            return Ok(Cx::new(1.0, 0.0));
        }
        if s.re > 0.0 {
            return Ok(Cx::new(0.0, 0.0));
        }
        return Err(Error::Domain(format!("0^({s}) is undefined")));
    }
    Ok((s * principal_ln(z)).exp())
}

/// True when `z` lies within `tol` of a non-positive integer.
pub(crate) fn near_nonpositive_integer(z: Cx, tol: f64) -> bool {
    z.im.abs() <= tol && z.re <= tol && (z.re - z.re.round()).abs() <= tol
}

/// Distance from `z` to the nearest integer.
pub(crate) fn integer_distance(z: Cx) -> f64 {
    Cx::new(z.re - z.re.round(), z.im).norm()
}
