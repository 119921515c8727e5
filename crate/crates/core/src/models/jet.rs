//! Second-order jets `(f, f', f'')` in `x`, used to build wavefunctions
//! and their derivatives by the product and chain rules.

use crate::cxfun::{hyp2f1, hyp2f1_d2w, hyp2f1_dw, ppow, Hyp2F1Params};
use crate::error::Result;
use crate::Cx;

/// Highest derivative a caller needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    Value,
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub v: Cx,
    pub d1: Cx,
    pub d2: Cx,
}

impl Jet {
    pub fn new(v: Cx, d1: Cx, d2: Cx) -> Self {
        Self { v, d1, d2 }
    }

    /// `exp(λ x)` scaled by `v` at `x`: derivatives `λ v`, `λ² v`.
    pub fn exponential(v: Cx, rate: Cx) -> Self {
        Self::new(v, rate * v, rate * rate * v)
    }

    /// Principal-branch `self^s`.
    pub fn powc(self, s: Cx) -> Result<Self> {
        let p = ppow(self.v, s)?;
        // p' / p = s b' / b
        let lg = self.d1 / self.v;
        let d1 = s * lg * p;
        let d2 = s * p * ((s - 1.0) * lg * lg + self.d2 / self.v);
        Ok(Self::new(p, d1, d2))
    }

    /// `F(inner(x))` given `F`, `F'`, `F''` at `inner.v`.
    pub fn compose(f: [Cx; 3], inner: Jet) -> Self {
        Self::new(
            f[0],
            f[1] * inner.d1,
            f[2] * inner.d1 * inner.d1 + f[1] * inner.d2,
        )
    }
}

impl std::ops::Mul for Jet {
    type Output = Jet;

    fn mul(self, o: Jet) -> Jet {
        Jet::new(
            self.v * o.v,
            self.d1 * o.v + self.v * o.d1,
            self.d2 * o.v + 2.0 * self.d1 * o.d1 + self.v * o.d2,
        )
    }
}

impl std::ops::Mul<Cx> for Jet {
    type Output = Jet;

    fn mul(self, s: Cx) -> Jet {
        Jet::new(self.v * s, self.d1 * s, self.d2 * s)
    }
}

/// `₂F₁` and as many `w`-derivatives as `order` requires (unused slots are
/// zero).
pub fn hyp2f1_derivatives(p: Hyp2F1Params, order: Order) -> Result<[Cx; 3]> {
    let zero = Cx::new(0.0, 0.0);
    let f0 = hyp2f1(p)?;
    let f1 = if order >= Order::First {
        hyp2f1_dw(p)?
    } else {
        zero
    };
    let f2 = if order >= Order::Second {
        hyp2f1_d2w(p)?
    } else {
        zero
    };
    Ok([f0, f1, f2])
}
