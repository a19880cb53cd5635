use thiserror::Error;

/// Errors raised by tensor construction, the class checkers, the solvers and the text format.
///
/// Index tuples carried by variants are 1-based, as the user wrote them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("tuple {tuple:?} has {found} indices, tensor order is {order}")]
    BadArity {
        tuple: Vec<usize>,
        order: usize,
        found: usize,
    },

    #[error("tuple {tuple:?}: index {index} out of range (dim {dim})")]
    IndexOutOfRange {
        tuple: Vec<usize>,
        index: usize,
        dim: usize,
    },

    #[error("duplicate tuple {tuple:?}")]
    DuplicateTuple { tuple: Vec<usize> },

    #[error("tuple {tuple:?}: non-finite value {value}")]
    NonFinite { tuple: Vec<usize>, value: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("shape mismatch: ({0}, {1}) vs ({2}, {3})")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("index set must be nonempty")]
    EmptyIndexSet,

    #[error("index sets must be strictly increasing")]
    UnsortedIndexSet,

    #[error("component {index} is negative ({value}) and the exponent {power} is fractional")]
    FractionalPowerOfNegative { index: usize, value: f64, power: f64 },

    #[error("matrix is not a permutation matrix")]
    NotPermutation,

    #[error("matrix is not square: {rows} rows, row {row} has {cols} columns")]
    NotSquare { rows: usize, row: usize, cols: usize },

    #[error("vector must be strictly positive, component {index} is {value}")]
    NotPositive { index: usize, value: f64 },

    #[error("vector must be nonnegative and nonzero")]
    NotNonnegativeNonzero,

    #[error("component {index}: u_i = {u} > 0 but (M u^(r-1))_i = {v} > 0")]
    GPrecondition { index: usize, u: f64, v: f64 },

    #[error("shift must be positive, got {0}")]
    NonPositiveShift(f64),

    #[error("instance too large for enumeration: {0}")]
    SizeGuard(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
