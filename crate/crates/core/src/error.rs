//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by construction, loading and solver routines.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument left the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller broke an API contract (mismatched lengths, bad ranges).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A design file failed to parse or validate.
    #[error("design load error at {path}:{line}: {msg}")]
    Load {
        path: String,
        line: usize,
        msg: String,
    },

    /// Assembling a ladder from designs failed.
    #[error("ladder error: {0}")]
    Ladder(String),

    /// A size or overflow guard tripped.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The request exceeds what the built-in catalogue can provide.
    #[error("capability: {0}")]
    Capability(String),

    /// An index insertion would break the down-set property.
    #[error("not admissible: {0}")]
    Admissibility(String),

    /// A per-dimension ladder has no usable level at the requested depth.
    #[error("ladder exhausted: {0}")]
    Exhausted(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
