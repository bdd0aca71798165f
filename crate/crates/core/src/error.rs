use thiserror::Error;

/// Errors produced by validating constructors and fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("inner shape is not contained in the outer shape")]
    NotContained,
    #[error("skew shape is not a border strip")]
    NotBorderStrip,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("duplicate variable in multilinear coefficient extraction")]
    DuplicateVariable,
    #[error("monomial contains a non-matrix variable")]
    NonMatrixVariable,
    #[error("variable violates the requested block split: {0}")]
    BlockSplit(String),
    #[error("companion matrix needs at least one entry")]
    EmptyCompanion,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
