use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum CoxError {
    #[error("invalid generator index {letter} for rank {rank}")]
    InvalidLetter { letter: usize, rank: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown catalog name `{0}`")]
    UnknownCatalog(String),

    #[error("parabolic subgroup on {0:?} is infinite or exceeds the enumeration cap")]
    InfiniteParabolic(Vec<usize>),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("empty interval: {0}")]
    EmptyInterval(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("internal error (likely a core bug): {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CoxError>;
