use thiserror::Error;

/// Errors raised by the arithmetic, reduction and evaluation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),

    #[error("the empty index has no {0} part")]
    EmptyIndex(&'static str),

    #[error(
        "power sum S_{d}({s}) needs {count} monic polynomials, over the brute-force budget of {budget}; \
         lower the precision or use an index whose entries are all <= q"
    )]
    PrecisionTooExpensive { d: u32, s: u32, count: u128, budget: u64 },

    #[error("reduction did not reach the Thakur basis after {steps} steps (trail: {})", trail.join(" -> "))]
    ReductionDiverged { steps: usize, trail: Vec<String> },

    #[error("index {0} is not admissible for this value")]
    NotAdmissible(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid field specification: {0}")]
    InvalidField(String),
}

impl Error {
    /// Stable variant name, used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::InsufficientPrecision(_) => "InsufficientPrecision",
            Error::EmptyIndex(_) => "EmptyIndex",
            Error::PrecisionTooExpensive { .. } => "PrecisionTooExpensive",
            Error::ReductionDiverged { .. } => "ReductionDiverged",
            Error::NotAdmissible(_) => "NotAdmissible",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse(_) => "Parse",
            Error::InvalidField(_) => "InvalidField",
        }
    }

    /// Whether the error comes from malformed user input rather than a computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::InvalidInput(_) | Error::InvalidField(_) | Error::NotAdmissible(_) | Error::EmptyIndex(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
