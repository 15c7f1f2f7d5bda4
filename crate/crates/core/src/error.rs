use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {symbol:?} at position {position} (expected {expected})")]
    InvalidSymbol {
        symbol: char,
        /// 1-based position of the offending symbol.
        position: usize,
        expected: &'static str,
    },
    #[error("empty string")]
    Empty,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("wrong alphabet: expected {expected}, found {found}")]
    WrongAlphabet { expected: String, found: String },
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
