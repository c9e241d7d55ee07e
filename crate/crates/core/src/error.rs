use thiserror::Error;

/// Errors raised by the combinatorial and algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("partition {0} is not 2-restricted")]
    NotTwoRestricted(String),

    #[error("partition {0} is not oddly regular")]
    NotOddlyRegular(String),

    #[error("invalid GL(P) label: {0}")]
    InvalidLabel(String),

    #[error("index {index} out of range 1..={len} for {what}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("length violation: {0}")]
    Length(String),

    #[error("degree must be at least 1, got {0}")]
    ZeroDegree(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("reflection chain left a nonzero integer part {0:?}")]
    ResidualWeight(Vec<i64>),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("elements belong to different variable tables")]
    TableMismatch,

    #[error("matrix is not invertible in the truncated algebra: {0}")]
    NotInvertible(String),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
