use thiserror::Error;

/// Failures raised by exact arithmetic, sequence construction and coefficient evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient is not exact in this ring")]
    NotDivisible,
    #[error("degenerate recurrence: t = 0 reduces it to first order")]
    DegenerateRecurrence,
    #[error("invalid characteristic roots: {0}")]
    InvalidRoots(&'static str),
    #[error("sequence term {index} is zero")]
    ZeroTerm { index: usize },
    #[error("lower index {k} exceeds upper index {n}")]
    IndexOutOfRange { n: usize, k: usize },
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
