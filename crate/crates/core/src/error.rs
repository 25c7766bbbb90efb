use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The operation is only defined for squarefree ideals.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// Zero or unit ideal where a nonzero proper one is required.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Consecutive maps of a complex do not compose to zero.
    #[error("internal consistency error: {0}")]
    NotAComplex(String),
}
