use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("states/operators have different representations")]
    RepresentationMismatch,

    #[error("state is not strictly positive (min eigenvalue {min_eigenvalue:e})")]
    NonPositiveState { min_eigenvalue: f64 },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid channel: {0}")]
    InvalidChannel(String),

    #[error("e^-H is not normalizable (leading coefficient must be positive)")]
    NonNormalizable,

    #[error("grid too narrow: boundary density is {boundary_ratio:e} of the peak (limit 1e-12)")]
    GridTooNarrow { boundary_ratio: f64 },

    #[error("sigma must be positive, got {0}")]
    InvalidSigma(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("feature is numerically zero")]
    ZeroFeature,

    #[error("observable not in the computed span (relative residual {residual:e})")]
    IncompleteSpan { residual: f64 },

    #[error("matrix is numerically singular (condition estimate {condition:e})")]
    SingularMatrix { condition: f64 },

    #[error("selected modes are coupled (max off-block entry {max_off_block:e})")]
    ModeCouplingDetected { max_off_block: f64 },

    #[error("Fock basis too large: {size} states exceeds cap {cap}")]
    BasisTooLarge { size: usize, cap: usize },

    #[error("operator truncations do not match: {expected} vs {found}")]
    TruncationMismatch { expected: usize, found: usize },

    #[error("unsupported interaction: {0}")]
    UnsupportedInteraction(String),

    #[error("degenerate block could not be resolved")]
    DegeneracyUnresolved,

    #[error("moment matching did not converge (residuals {residual2:e}, {residual4:e})")]
    NoConvergence { residual2: f64, residual4: f64 },

    #[error("tangent dimension {dim} exceeds cap {cap}")]
    DimensionTooLarge { dim: usize, cap: usize },

    #[error("serialization error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
