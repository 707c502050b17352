use thiserror::Error;

use crate::report::VerificationReport;

#[derive(Debug, Error)]
pub enum Error {
    /// `m^dim` has a nonzero entry, so the exponential series does not terminate.
    #[error("matrix is not nilpotent: ({row},{col}) entry of its {power}-th power is {value}")]
    NotNilpotent {
        power: usize,
        row: usize,
        col: usize,
        value: String,
    },

    #[error("matrix is singular (no pivot in column {col})")]
    Singular { col: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("unknown variant {0}")]
    UnknownVariant(String),

    #[error("bilinear form is not a 2-cocycle: {}", .0.summary())]
    NotACocycle(VerificationReport),

    #[error("element is not central: {}", .0.summary())]
    NotCentral(VerificationReport),

    #[error("coalgebra is not cocommutative: {}", .0.summary())]
    NotCocommutative(VerificationReport),

    #[error("invalid structure: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
