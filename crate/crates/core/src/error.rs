use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// The Gram matrix BᵀB is singular, i.e. B does not have full column
    /// rank, so the pseudo-inverse normalization is undefined.
    #[error("Gram matrix is singular")]
    GramSingular,

    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// The map-synthesis search space exceeds the configured bound.
    #[error("enumeration bound exceeded ({candidates} candidates > {bound})")]
    EnumerationBoundExceeded { candidates: usize, bound: usize },

    /// A map with a nonzero offset was passed where a linear map is required
    /// and the affine extension was not explicitly enabled.
    #[error("map has a nonzero offset; pass the affine flag to allow affine maps")]
    AffineOffsetDisallowed,

    /// Internal consistency failure: a produced witness did not survive
    /// re-verification by the membership operations.
    #[error("internal error: witness failed re-verification")]
    WitnessVerification,
}

impl Error {
    pub(crate) fn dims(expected: usize, found: usize) -> Self {
        Error::DimensionMismatch { expected, found }
    }
}
