use thiserror::Error;

/// Errors surfaced by construction and by the contract-checked operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a root of the system: {0}")]
    NotARoot(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("axiom violation: {0}")]
    AxiomViolation(String),

    #[error("invalid base: {0}")]
    InvalidBase(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("degenerate bilinear form: {0}")]
    DegenerateForm(String),

    #[error("generated algebra is not closed: {0}")]
    ClosureFailure(String),

    #[error("conjugation leaves the algebra: {0}")]
    EscapesSpan(String),

    #[error("malformed export table: {0}")]
    BadExport(String),
}

pub type Result<T> = std::result::Result<T, Error>;
