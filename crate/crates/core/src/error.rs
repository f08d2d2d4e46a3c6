use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("monomial is not normalized: {0}")]
    NotNormalized(String),

    #[error("frequency vector has weight {got}, expected {expected}")]
    WeightMismatch { expected: u32, got: u32 },

    #[error("enumeration budget exceeded: {needed} items needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    /// The solver or degree search produced a result violating a structural
    /// guarantee. Always a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
