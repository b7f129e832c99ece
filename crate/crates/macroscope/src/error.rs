//! Error type shared across the crate.

use crate::quantities::Dimension;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: {left} vs {right}")]
    DimensionMismatch {
        context: &'static str,
        left: Dimension,
        right: Dimension,
    },

    #[error("{name} must be positive, got {value:e}")]
    NonPositiveInput { name: &'static str, value: f64 },

    #[error("relative error must be non-negative, got {0:e}")]
    NegativeError(f64),

    #[error("interval endpoints inverted: lo {lo:e} > hi {hi:e}")]
    InvertedInterval { lo: f64, hi: f64 },

    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("degenerate slit geometry: separation {separation:e} m does not exceed aperture width {collimator:e} m")]
    DegenerateGeometry { separation: f64, collimator: f64 },

    #[error("multi-slit configuration requires at least 3 slits, got {0}")]
    TooFewSlits(u32),

    #[error("principal quantum number must be >= 2, got {0}")]
    InvalidQuantumNumber(u32),

    #[error("probe frequency {nu:e} Hz lies inside the resonance guard band of the n={n} level")]
    NearResonance { nu: f64, n: u32 },

    #[error("empty hydrogenic level set")]
    EmptyLevelSet,

    #[error("cross-section distinction vanishes; distinguishing time is undefined")]
    ZeroDistinction,

    #[error("parse error{}: {message}", at_line(.line))]
    Parse { line: usize, message: String },

    #[error("unit error{}: {message}", at_line(.line))]
    Unit { line: usize, message: String },

    #[error("validation error{} in field `{field}`: {message}", at_line(.line))]
    Validation {
        line: usize,
        field: String,
        message: String,
    },

    #[error("missing parameter: {0}")]
    MissingParameter(String),

    #[error("empty dataset")]
    EmptyDataset,
}

/// Line 0 marks values that came from command-line arguments rather than a
/// file; those messages carry no line suffix.
fn at_line(line: &usize) -> String {
    if *line == 0 {
        String::new()
    } else {
        format!(" at line {line}")
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn unit(line: usize, message: impl Into<String>) -> Error {
        Error::Unit {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn validation(
        line: usize,
        field: impl Into<String>,
        message: impl Into<String>,
    ) -> Error {
        Error::Validation {
            line,
            field: field.into(),
            message: message.into(),
        }
    }
}
