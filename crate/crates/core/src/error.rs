use thiserror::Error;

/// Errors raised by the library. Verdict-style checks report failures in
/// their return value instead of through this type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear system has no solution (residual {residual:.3e})")]
    NoSolution { residual: f64 },
    #[error("generated algebra is not closed under adjoint (defect {0:.3e})")]
    NotSelfAdjointAlgebra(f64),
    #[error("numerical tolerance breakdown: {0}")]
    ToleranceBreakdown(String),
    #[error("invalid quantum set: {0}")]
    InvalidQuantumSet(String),
    #[error("not a projection (defect {0:.3e})")]
    InvalidProjection(f64),
    #[error("not a function: {0}")]
    NotAFunction(String),
    #[error("not a W*-morphism: {0}")]
    InvalidMorphism(String),
    #[error("state is not diagonal (mass outside the diagonal projection {0:.3e})")]
    NotDiagonal(f64),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("invalid monoid table: {0}")]
    InvalidTable(String),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("Kac checks disagree: {0}")]
    InternalDisagreement(String),
    #[error("tolerance must be a positive finite number, got {0}")]
    InvalidTolerance(f64),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
