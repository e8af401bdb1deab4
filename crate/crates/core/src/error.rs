//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Model pieces disagree on dimensions.
    #[error("structural mismatch: {0}")]
    Structural(String),

    /// A model function produced a non-finite value where a finite one is required.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// An input left the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Data violates an invariant it is documented to uphold.
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// The requested operation needs model features the catalog entry lacks.
    #[error("unsupported model: {0}")]
    UnsupportedModel(String),

    /// A catalog lookup failed; lists what exists.
    #[error("unknown name {requested:?}; available: {available:?}")]
    UnknownName {
        requested: String,
        available: Vec<String>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
