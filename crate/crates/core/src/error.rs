use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CmppError {
    /// Caller passed arguments that do not fit together (mismatched truncations,
    /// stale height assignments, malformed CLI strings).
    #[error("usage error: {0}")]
    Usage(String),

    /// Input is well formed but outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A property that the construction guarantees did not hold.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, CmppError>;
