use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix dimension {0} is odd")]
    OddDimension(usize),

    #[error("matrix does not preserve the intersection form")]
    NotSymplectic,

    #[error("Chern class must be even (got {0})")]
    OddChernClass(i64),

    #[error("genus {genus} is outside the supported range {min}..={max}")]
    GenusOutOfRange {
        genus: usize,
        min: usize,
        max: usize,
    },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("generator index {index} out of range 0..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },

    #[error("group-ring matrix is not invertible")]
    NotInvertible,

    #[error("invalid bit string {0:?}")]
    InvalidBits(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
