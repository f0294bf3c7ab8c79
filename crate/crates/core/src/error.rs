use thiserror::Error;

/// Errors raised by the representation builders and estimators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IrrepError {
    #[error("size mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Young diagram: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("{what} = {value} out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("{what} limit exceeded: {requested} > {limit}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("shape {0:?} is not self-conjugate")]
    NotSelfConjugate(Vec<usize>),

    #[error("permutation is odd; alternating-group elements must be even")]
    OddPermutation,

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("matrix is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("matrix is not orthogonal (deviation {deviation:.3e})")]
    NotOrthogonal { deviation: f64 },

    #[error("determinant {0:.6} is not 1")]
    DeterminantNotOne(f64),

    #[error("matrix is not supported on a single adjacent 2x2 block")]
    UnsupportedSupport,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("state vector is not normalized (norm {0:.12})")]
    NotNormalized(f64),

    #[error("internal consistency check failed: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, IrrepError>;
