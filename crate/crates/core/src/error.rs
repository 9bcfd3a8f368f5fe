use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("ground sets differ")]
    GroundSetMismatch,

    #[error("rank {rank} exceeds bound {bound}")]
    BoundExceeded { rank: usize, bound: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot parse cycle notation: {0}")]
    Parse(String),

    #[error("not an element of D_{0}")]
    NotInD(usize),

    #[error("reference permutation has {0} cycles, expected 1 or 2")]
    TooManyCycles(usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("partition is not in {0}")]
    NotInPoset(String),

    #[error("element is not in the poset")]
    NotAnElement,

    #[error("relation is not a partial order: {0}")]
    NotAnOrder(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
