use std::fmt;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input value violates a documented precondition.
    InvalidInput(String),
    /// A frequency interval contains no grid bin.
    EmptyBand(String),
    /// A requested frequency does not coincide with any grid bin.
    OffGridFrequency(String),
    /// A coefficient file could not be parsed.
    Format {
        /// 1-based line number of the offending line.
        line: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::EmptyBand(msg) => write!(f, "empty band: {msg}"),
            Error::OffGridFrequency(msg) => write!(f, "off-grid frequency: {msg}"),
            Error::Format { line, message } => write!(f, "format error at line {line}: {message}"),
        }
    }
}

impl std::error::Error for Error {}
