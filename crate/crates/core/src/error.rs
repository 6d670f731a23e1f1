use thiserror::Error;

use crate::cube::CubePoint;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A cube dimension exceeds the enumeration cap (see [`crate::cube::max_dim`]).
    #[error("dimension {n} exceeds the enumeration cap {cap}")]
    DimensionCap { n: usize, cap: usize },

    /// Two objects that must live in the same space do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A Fourier-Motzkin run grew past its constraint budget.
    #[error("resource cap exceeded: {reached} constraints (limit {limit})")]
    ResourceCap { limit: usize, reached: usize },

    /// Precondition of the parity half-space check failed: the half-space
    /// does not contain every odd-weight point. Carries the first witness.
    #[error("ODD_NOT_CONTAINED: odd point {witness} lies outside the half-space")]
    OddNotContained { witness: CubePoint },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Structurally invalid input (bad graph, non-weight-2 member, ...).
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
