use thiserror::Error;

/// Errors raised while building or querying a fuzzy soft set.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FssError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("grade {value:?} is outside [0, 1]")]
    GradeOutOfRange { value: String },
    #[error("grade {value:?} is not a decimal with at most {max_digits} fractional digits")]
    InvalidGrade { value: String, max_digits: u32 },
    #[error("duplicate {kind} id {id:?}")]
    DuplicateId { kind: &'static str, id: String },
    #[error("empty {kind} id")]
    EmptyId { kind: &'static str },
    #[error("the universe has no alternatives")]
    EmptyUniverse,
    #[error("the attribute set is empty")]
    EmptyAttributeSet,
    #[error("unknown attribute {0:?}")]
    UnknownAttribute(String),
    #[error("unknown alternative {0:?}")]
    UnknownAlternative(String),
    #[error("degenerate cumulative scores (sub = {sub}, equity = {equity})")]
    DegenerateScores { sub: u64, equity: u64 },
}

impl FssError {
    /// Stable machine-readable code, used by the CLI and HTTP layers.
    pub fn code(&self) -> &'static str {
        match self {
            FssError::DimensionMismatch(_) => "DimensionMismatch",
            FssError::GradeOutOfRange { .. } => "GradeOutOfRange",
            FssError::InvalidGrade { .. } => "InvalidGrade",
            FssError::DuplicateId { .. } => "DuplicateId",
            FssError::EmptyId { .. } => "EmptyId",
            FssError::EmptyUniverse => "EmptyUniverse",
            FssError::EmptyAttributeSet => "EmptyAttributeSet",
            FssError::UnknownAttribute(_) => "UnknownAttribute",
            FssError::UnknownAlternative(_) => "UnknownAlternative",
            FssError::DegenerateScores { .. } => "DegenerateScores",
        }
    }
}

pub type Result<T, E = FssError> = std::result::Result<T, E>;
