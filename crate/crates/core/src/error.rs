use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: u32, right: u32 },

    #[error("composition {0} is not strong (a zero precedes a nonzero part)")]
    NotStrong(String),

    #[error("composition {0} is not weakly decreasing")]
    NotPartition(String),

    #[error("composition {composition} does not fit in {nvars} variables")]
    TooLong { composition: String, nvars: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("part {index} of {composition} is zero")]
    ZeroPart { composition: String, index: usize },

    #[error("invalid permutation {0}")]
    InvalidPermutation(String),

    #[error("word {0} is not reduced")]
    NotReduced(String),

    #[error("∂̃ does not satisfy the braid relations; an explicit word is required")]
    NoBraidRelations,

    #[error("basis element {0} does not lead with coefficient 1")]
    NotUnitriangular(String),

    #[error("{0}")]
    Usage(String),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse { column, message: message.into() }
    }
}
