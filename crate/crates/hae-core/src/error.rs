//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Tensor or matrix dimensions do not line up.
    #[error("dimension error: {0}")]
    Dim(String),

    /// Non-finite values or other numeric failures.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Incompatible group descriptors or world variants.
    #[error("type error: {0}")]
    Incompatible(String),

    /// Bad configuration (unknown keys, invalid values, model/data mismatch).
    #[error("config error: {0}")]
    Config(String),

    /// Malformed dataset or checkpoint container.
    #[error("format error: {0}")]
    Format(String),

    /// Invalid input to an operation (bad index, unusable dataset for a suite).
    #[error("input error: {0}")]
    Input(String),

    /// Operation called in an invalid state (e.g. optimizer step without grads).
    #[error("invalid state: {0}")]
    State(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn dim(msg: impl Into<String>) -> Self {
        Error::Dim(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
    pub fn incompatible(msg: impl Into<String>) -> Self {
        Error::Incompatible(msg.into())
    }
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn state(msg: impl Into<String>) -> Self {
        Error::State(msg.into())
    }
}
