use thiserror::Error;

use crate::Cx;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole of the function at {0}")]
    Pole(Cx),

    #[error("series did not converge within {terms} terms")]
    ConvergenceFailure { terms: usize },

    #[error("lost {0:.1} digits to cancellation")]
    Cancellation(f64),

    #[error("degenerate hypergeometric parameters: {0}")]
    DegenerateParameters(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("point {0} is too close to a node of the wavefunction")]
    NodeProximity(Cx),

    #[error("newton iteration diverged from seed {0}")]
    NewtonDivergence(Cx),

    #[error("no node found inside the alpha window [{0}, {1}]")]
    NoPoleInWindow(f64, f64),

    #[error("no tunneling launch found on the integration line")]
    NoTunnelingFound,

    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),

    #[error("pole ordinate {beta} lies outside the period (-{half_period}, {half_period})")]
    BetaOutOfPeriod { beta: f64, half_period: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
