use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("polynomial ring mismatch")]
    RingMismatch,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid system: {0}")]
    InvalidSpec(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0}")]
    Structural(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
