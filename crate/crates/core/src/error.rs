use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every stage of the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes modulo {p}")]
    BadReduction { p: u32 },
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("state file schema error: {0}")]
    Schema(String),
    #[error("index {index:?} out of range for local dimension {d}")]
    Index { index: Vec<i64>, d: usize },
    #[error("duplicate entry for index {0:?}")]
    DuplicateIndex(Vec<usize>),
    #[error("operator factor {factor} is singular")]
    SingularOperator { factor: usize },
    #[error("operator shape does not match the state")]
    OperatorShape,
    #[error("V_eta has dimension {0}, expected the local dimension")]
    RankDeficient(usize),
    #[error("format ({n},{d}) is not supported by this operation")]
    UnsupportedFormat { n: usize, d: usize },
    #[error("invalid format parameters: {0}")]
    InvalidFormat(String),
    #[error("point is not on the variety")]
    NotOnVariety,
    #[error("every prime had bad reduction")]
    AllPrimesBad,
    #[error("form has the wrong multidegree")]
    WrongDegree,
    #[error("tensor has the wrong format for this hyperdeterminant")]
    WrongFormat,
    #[error("states have different formats")]
    FormatMismatch,
    #[error("evaluation rank {rank} is below the generic target {needed}")]
    InsufficientPoints { rank: usize, needed: usize },
    #[error("invalid axis selection {0:?}")]
    InvalidAxes(Vec<usize>),
}
