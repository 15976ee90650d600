use thiserror::Error;

/// Errors raised by the library. The CLI maps each variant onto an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed input text (JSON, family spec, permutation list).
    #[error("parse error: {0}")]
    Parse(String),

    /// The instance is larger than the solver is willing to handle exactly.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A bounded search ran out of room before finding an answer.
    #[error("not found: {0}")]
    NotFound(String),

    /// An internal consistency check failed. This is always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code: 2 for bad input, 3 for refused or exhausted
    /// searches, 4 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Parse(_) => 2,
            Error::Capacity(_) | Error::NotFound(_) => 3,
            Error::Invariant(_) => 4,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
