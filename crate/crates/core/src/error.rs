use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Dimensions outside `m, n >= 3`, `k in {1, 2}`.
    InvalidDims { m: usize, n: usize, k: usize },
    /// A vertex or row/column index outside the grid.
    OutOfRange { what: &'static str, index: usize, len: usize },
    /// Malformed input such as a wrong cell count or a color above `k`.
    Input(String),
    /// A recipe or bound was requested outside its hypothesis.
    Applicability(String),
    /// An enumeration or state space is larger than the configured budget.
    Capacity { what: &'static str, requested: u64, limit: u64 },
    /// A construction failed its own verification. Always a bug.
    Construction(String),
    /// Two registry formulas disagree on the same instance.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDims { m, n, k } => {
                write!(f, "invalid dimensions m={m}, n={n}, k={k} (need m, n >= 3 and k in {{1, 2}})")
            }
            Error::OutOfRange { what, index, len } => {
                write!(f, "{what} index {index} out of range 0..{len}")
            }
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::Applicability(msg) => write!(f, "not applicable: {msg}"),
            Error::Capacity { what, requested, limit } => {
                write!(f, "{what} budget exceeded: {requested} > limit {limit}")
            }
            Error::Construction(msg) => write!(f, "construction bug: {msg}"),
            Error::Inconsistent(msg) => write!(f, "inconsistent registry: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
