//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero vector cannot represent a projective point")]
    ZeroVector,

    #[error("operation requires a {expected} point, got {got}")]
    WrongSign {
        expected: &'static str,
        got: &'static str,
    },

    #[error("points coincide projectively")]
    CoincidentPoints,

    #[error("Gram matrix is singular")]
    SingularGram,

    #[error("span of the lifts is degenerate")]
    DegenerateSpan,

    #[error("triple is not generic: {0}")]
    NotGeneric(&'static str),

    #[error("positive triple spans a degenerate subspace; its congruence class is not determined by Hermitian invariants")]
    NonRegularPositive,

    #[error("eta invariant undefined: the first two points are orthogonal")]
    EtaUndefined,

    #[error("triple class mismatch: {0}")]
    ClassMismatch(String),

    #[error("Hermitian triple product vanished; angular invariants undefined")]
    VanishingTripleProduct,

    #[error("inverse trig argument {arg} lies outside [-1,1] beyond the clamp tolerance")]
    TrigDomain { arg: f64 },

    #[error("moduli parameter outside the realizable set: {0}")]
    ModuliDomain(String),

    #[error("matrix has signature {found}, expected {expected}")]
    Signature { expected: String, found: String },

    #[error("normal forms disagree for inputs reported congruent")]
    NormalFormMismatch,

    #[error("isometry verification failed: residual {residual:e}")]
    IsometryResidual { residual: f64 },

    #[error("family parameter out of range: {0}")]
    ParamRange(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the error stems from the geometric configuration (degenerate,
    /// boundary, unsupported class) rather than malformed input.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::DimensionMismatch { .. })
    }
}
