use thiserror::Error;

/// Failures surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact in the coefficient ring")]
    InexactDivision,
    #[error("invalid weight sequence: {0}")]
    InvalidWeight(String),
    #[error("weight {weight} is {kind}, expected a wild weight")]
    NotWild { weight: String, kind: String },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("graph is not a tree: {0}")]
    NotATree(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
