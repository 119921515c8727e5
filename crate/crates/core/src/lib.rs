//! Complex quantum trajectories for one-dimensional scattering eigenstates
//! and trajectory-based reflection probabilities.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cxfun;
pub mod dynamics;
pub mod error;
pub mod models;
pub mod spectral;
pub mod tunneling;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type Cx = num_complex::Complex64;
