use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("not a perfect square: {0}")]
    NotAPerfectSquare(String),
    #[error("{what} exceeds the bound {bound}")]
    BoundExceeded { what: String, bound: usize },
    #[error("no Jordan certificate found: {0}")]
    NoCertificate(String),
    #[error("no matrix model: {0}")]
    NoMatrixModel(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
