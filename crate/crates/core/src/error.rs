use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    Domain(String),
    #[error("integral diverges: {0}")]
    Divergent(String),
    #[error("symmetric eigen-solve did not converge for order {0}")]
    EigenSolve(usize),
    #[error("quadrature order {have} cannot resolve degree {degree}; need order >= {need}")]
    QuadratureOrder { have: usize, degree: usize, need: usize },
    #[error("point {x} lies outside the tabulated range [{lo}, {hi}]")]
    Extrapolation { x: f64, lo: f64, hi: f64 },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
