//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("gamma pole at nonpositive integer {0}")]
    GammaPole(f64),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("series/contour did not converge: {0}")]
    NonConvergence(String),
    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),
    #[error("matrix is not diagonalizable within tolerance (condition estimate {0:.3e})")]
    NonDiagonalizable(f64),
    #[error("singular point: {0}")]
    Singular(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unsupported norm for this operation: {0}")]
    UnsupportedNorm(String),
    #[error("linear solve failed: {0}")]
    LinearSolve(String),
}

pub type Result<T> = std::result::Result<T, Error>;
