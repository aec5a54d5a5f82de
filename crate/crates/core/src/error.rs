use thiserror::Error;

pub type Result<T> = std::result::Result<T, BraidError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    /// Malformed text word. `position` is the 0-based index of the offending
    /// whitespace-separated token (the `Bn:` header is token 0).
    #[error("parse error at token {position} ({token:?}): {message}")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("strand count mismatch: B_{left} vs B_{right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("rewrite error: {0}")]
    Rewrite(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("closure is not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("I/O error: {0}")]
    Io(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An exactness assertion failed. Always a bug, never a user error.
    #[error("internal error: {0}")]
    Internal(String),
}

impl BraidError {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        BraidError::Parameter(msg.into())
    }
}
