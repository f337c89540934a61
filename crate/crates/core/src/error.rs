use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("algebra mismatch: {0} and {1}")]
    AlgebraMismatch(String, String),

    #[error("{0} does not belong to the subalgebra")]
    NotInSubalgebra(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("the zero vector has no degree")]
    ZeroVector,

    #[error("tuple length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("multi-index is zero")]
    ZeroMultiIndex,

    #[error("degree prediction mismatch after applying {applied}: predicted {predicted}, got {actual}")]
    PredictionMismatch {
        applied: String,
        predicted: String,
        actual: String,
    },

    #[error("reduction exceeded its step bound of {0}")]
    StepBoundExceeded(usize),

    #[error("reduction produced the zero vector after applying {0}")]
    ZeroIntermediate(String),

    #[error("no admissible reduction element for {0}")]
    NoReductionElement(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown suite: {0}")]
    UnknownSuite(String),
}
