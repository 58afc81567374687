use alloc::string::String;
use core::fmt;

/// Errors shared across the diffusion, guidance, and defense kernels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A constructor precondition was violated.
    InvalidParameter(String),
    /// Two images that must share a shape do not.
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// A step index fell outside the schedule.
    StepOutOfRange { t: usize, max: usize },
    /// `alpha_bar(t)` underflowed to zero, so the step cannot be inverted.
    DegenerateStep(usize),
    /// The encoder produced a pre-normalization vector with vanishing norm.
    DegenerateFeature,
    /// A mixture-component label outside `0..K`.
    BadLabel { label: usize, count: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::ShapeMismatch { expected, got } => write!(
                f,
                "shape mismatch: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            Error::StepOutOfRange { t, max } => {
                write!(f, "step index {t} out of range (max {max})")
            }
            Error::DegenerateStep(t) => {
                write!(f, "alpha_bar underflowed to zero at step {t}")
            }
            Error::DegenerateFeature => write!(f, "feature vector norm below 1e-12"),
            Error::BadLabel { label, count } => {
                write!(f, "label {label} out of range for {count} components")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
