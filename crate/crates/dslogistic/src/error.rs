//! Crate-wide error type.

use std::fmt;

/// Why the method of proportion could not be applied to a sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MopFailure {
    /// Every observation is negative (implies no zeros either).
    AllNegative,
    /// No observation equals zero, so `r0 = 0`.
    NoZeros,
    /// No negative observation, so the exponent `r+/r-` is undefined.
    NoNegatives,
    /// Every nonnegative observation is zero, so `r+ - r0 = 0`.
    NoPositives,
}

impl fmt::Display for MopFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MopFailure::AllNegative => write!(f, "all observations are negative (s+ = 0)"),
            MopFailure::NoZeros => write!(f, "sample contains no zeros (r0 = 0)"),
            MopFailure::NoNegatives => write!(f, "sample contains no negative values (s- = 0)"),
            MopFailure::NoPositives => {
                write!(f, "all nonnegative observations are zero (s+ = r0)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A distribution parameter violates its domain constraint.
    InvalidParameter(String),
    /// A function argument (probability level, sample size, ...) is out of range.
    InvalidArgument(String),
    /// The method of proportion is undefined for the given sample.
    MopInapplicable(MopFailure),
    /// Malformed text input (dataset file or simulation config).
    Parse { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::MopInapplicable(why) => {
                write!(f, "method of proportion is not applicable: {why}")
            }
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
