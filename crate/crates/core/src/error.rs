use thiserror::Error;

/// Errors raised by group construction and analysis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("group of order {order} exceeds the {what} cutoff {cutoff}")]
    CutoffExceeded {
        what: &'static str,
        order: u64,
        cutoff: u64,
    },

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("generator images do not define a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("construction self-check failed: {0}")]
    SelfCheck(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed catalog entry: {0}")]
    Catalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
