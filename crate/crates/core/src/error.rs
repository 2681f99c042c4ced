use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("oracle inapplicable: {0}")]
    OracleInapplicable(String),
    #[error("generator list is not a Groebner basis")]
    NotGroebner,
    #[error("S-pair limit of {limit} exceeded")]
    ResourceLimit { limit: usize },
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
}

impl Error {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RingMismatch(_) => "ring_mismatch",
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Precondition(_) => "precondition",
            Error::OracleInapplicable(_) => "oracle_inapplicable",
            Error::NotGroebner => "not_groebner",
            Error::ResourceLimit { .. } => "resource_limit",
            Error::Parse { .. } => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
