use alloc::string::String;
use core::fmt;

use num_complex::Complex64;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter token could not be parsed.
    MalformedParameter { token: String, reason: &'static str },
    /// An argument lies outside the domain of the operation.
    Domain(&'static str),
    /// The working precision is too small to hold an exact intermediate.
    InsufficientPrecision { required_digits: u32, digits: u32 },
    /// Two operands have incompatible shapes.
    DimensionMismatch { expected: usize, found: usize },
    /// Digit escalation hit its ceiling without meeting the convergence criterion.
    EscalationCeiling { ceiling: u32 },
    /// Adaptive quadrature ran out of subdivisions.
    AccuracyNotReached { estimate: Complex64, error_estimate: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedParameter { token, reason } => {
                write!(f, "malformed parameter `{token}`: {reason}")
            }
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::InsufficientPrecision {
                required_digits,
                digits,
            } => write!(
                f,
                "insufficient precision: {digits} digits given, at least {required_digits} required"
            ),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::EscalationCeiling { ceiling } => {
                write!(f, "no convergence below the ceiling of {ceiling} digits")
            }
            Error::AccuracyNotReached {
                estimate,
                error_estimate,
            } => write!(
                f,
                "quadrature accuracy not reached: best estimate {estimate} (error ~{error_estimate:.3e})"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
