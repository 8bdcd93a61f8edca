use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected} elements, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("parse error at token `{token}`: {reason}")]
    Parse { token: String, reason: &'static str },

    #[error("{what} out of range: {value} (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("unknown arrow `{0}` for this presentation")]
    UnknownArrow(String),

    #[error("unknown object `{0}` for this presentation")]
    UnknownObject(String),

    #[error("letters are not composable: `{left}` ends at {at}, `{right}` starts at {next}")]
    NotComposable {
        left: String,
        right: String,
        at: String,
        next: String,
    },

    #[error("presentation mismatch")]
    PresentationMismatch,

    #[error("invalid mapping class: {0}")]
    InvalidMappingClass(String),

    #[error("word is not a loop at the base object {base}: runs {start} -> {end}")]
    NotALoop {
        base: String,
        start: String,
        end: String,
    },

    #[error("could not invert mapping class: {0}")]
    NotInvertible(String),
}
