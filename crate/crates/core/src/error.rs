// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors produced by the library.
///
/// Variants split into two families: malformed input ([`Error::is_parse_error`])
/// and violated numerical preconditions. The CLI maps them to exit codes 2 and 3.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("width parameter a = {0} is outside [0, 1/3)")]
    InvalidWidth(f64),

    #[error("closed form needs a > 0; use the recurrence for a = 0")]
    DegenerateParameter,

    #[error("coefficient tail diverges for a = {0} (needs a < 1/3)")]
    DivergentTail(f64),

    #[error("derivative order {0} too large for an exact rational")]
    OrderTooLarge(u32),

    #[error("insufficient samples: need at least {needed}, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("dilation factor must be nonzero")]
    ZeroDilation,

    #[error("spectral index overflow while dilating index {index} by {factor}")]
    IndexOverflow { index: i64, factor: i64 },

    #[error("degenerate contour: {0}")]
    DegenerateContour(&'static str),

    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },

    #[error("nothing to render")]
    EmptyInput,

    #[error("unsupported path command or token {token:?} at byte {offset}")]
    UnsupportedCommand { token: String, offset: usize },

    #[error("subpath starting at byte {offset} is not closed with Z")]
    UnclosedSubpath { offset: usize },

    #[error("path data contains no subpaths")]
    EmptyPath,

    #[error("line {line}: malformed row {text:?}")]
    MalformedRow { line: usize, text: String },

    #[error("contour needs at least 3 points, got {0}")]
    TooFewPoints(usize),

    #[error("malformed document: {0}")]
    Format(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// True for errors caused by unreadable input rather than violated preconditions.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedCommand { .. }
                | Error::UnclosedSubpath { .. }
                | Error::EmptyPath
                | Error::MalformedRow { .. }
                | Error::TooFewPoints(_)
                | Error::Format(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
