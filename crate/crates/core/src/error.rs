use thiserror::Error;

/// Errors raised by the library. Every variant except [`Error::CandidateLimit`]
/// describes a violated precondition of the called operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse polygon {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: String, found: String },

    #[error("{0} is not dominated by the bound")]
    NotDominated(String),

    #[error("{0} is not semistable (needs exactly one slope block)")]
    NotSemistable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("candidate limit of {limit} exceeded")]
    CandidateLimit { limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
