use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension {0} is not prime")]
    NotPrime(u64),

    #[error("dimension {0} is not supported (need an odd prime d >= 3)")]
    UnsupportedDimension(u64),

    #[error("{0} has no inverse modulo {1}")]
    NoInverse(u64, u64),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("no common point for APG line {0}")]
    NoCommonPoint(String),

    #[error("operator is not Hermitian: entry ({row},{col}) deviates from its mirror by {deviation:e}")]
    NonHermitianInput { row: usize, col: usize, deviation: f64 },

    #[error("trace is {0}, expected 1")]
    InvalidTrace(f64),

    #[error("non-finite matrix entry at ({0},{1})")]
    NonFinite(usize, usize),

    #[error("quasi-distribution has no value for line {0}")]
    MissingLine(String),

    #[error("line {0} appears more than once")]
    DuplicateLine(String),

    #[error("probability table has no value for point {0}")]
    IncompleteProbabilities(String),

    #[error("point {0} appears more than once")]
    DuplicatePoint(String),

    #[error("column b={b} sums to {sum}, expected 1")]
    ColumnNotNormalized { b: i64, sum: f64 },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("label {0} is out of range")]
    InvalidLabel(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
