use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument outside supported range: {0}")]
    Range(String),

    #[error("argument outside the function domain: {0}")]
    Domain(String),

    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),

    #[error("included angle undefined: adjacent side has zero length")]
    UndefinedAngle,

    #[error("closed form is singular on a degenerate triangle")]
    Singular,

    #[error("quadrature did not converge: {0}")]
    Convergence(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
