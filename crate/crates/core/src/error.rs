use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("element leaves the span of the basis: {0}")]
    OutOfSpan(String),
    #[error("basis is linearly dependent: {0}")]
    Dependent(String),
    #[error("representation does not respect brackets: {0}")]
    NotHomomorphism(String),
    #[error("symbolic elimination refused: {0}")]
    SymbolicTooLarge(String),
    #[error("Monte-Carlo sample box {0} is below the minimum {1}")]
    BoxTooSmall(u64, u64),
    #[error("invalid bilinear form: {0}")]
    InvalidForm(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("inconsistent parameters: {0}")]
    Inconsistent(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("invalid orbit representative: {0}")]
    InvalidRep(String),
    #[error("self-check failed: {0}")]
    SelfCheck(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
