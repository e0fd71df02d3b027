use thiserror::Error;

/// Errors raised by graph construction, cleaning and the orientation oracle.
#[derive(Debug, Error)]
pub enum JacoError {
    /// An argument outside the operation's domain (bad size, index, or malformed input).
    #[error("{0}")]
    Domain(String),

    /// The orientation enumeration would exceed the configured edge cap.
    #[error("edge count {eps} exceeds the orientation cap {cap}")]
    CapExceeded { eps: usize, cap: usize },

    /// A cyclic orientation has no finite cleaning allocation.
    #[error("orientation undoable: no finite allocation cleans a cyclic digraph")]
    Undoable,

    /// A structural property that must hold by construction was violated.
    #[error("internal consistency violated: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = JacoError> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> JacoError {
    JacoError::Domain(msg.into())
}
