use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("generator x{index} is out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("invalid strand count {0}")]
    InvalidStrands(usize),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("braid is not square-free")]
    NotSquareFree,

    #[error("braid is not literally simple")]
    NotLiterallySimple,

    #[error("{what} bound exceeded (limit {limit})")]
    BoundExceeded { what: &'static str, limit: usize },

    #[error("invalid cycle decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid conjugacy type: {0}")]
    InvalidConjugacyType(String),

    #[error("move {index} is not applicable: {reason}")]
    InapplicableMove { index: usize, reason: String },

    #[error("negative exponent {0}")]
    NegativeExponent(i64),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
