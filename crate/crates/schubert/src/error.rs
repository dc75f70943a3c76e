use std::fmt;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts are not weakly decreasing, or a part is zero.
    InvalidPartition(String),
    /// A partition does not fit inside the rectangle it is measured against.
    NotContained(String),
    /// Inner shape not contained in outer shape, or cell data inconsistent.
    InvalidShape(String),
    /// A tableau violates a precondition (semistandardness, ballotness,
    /// marker placement, content).
    InvalidTableau(String),
    /// A jeu de taquin hole is not a legal starting square.
    InvalidHole(String),
    /// |alpha| + |beta| + |gamma| does not equal rows*cols - 1.
    SizeMismatch {
        alpha: usize,
        beta: usize,
        gamma: usize,
        expected: usize,
    },
    /// Malformed textual input.
    Parse(String),
    /// Out-of-range argument (family parameter, strip index, ...).
    InvalidArgument(String),
    /// An internal invariant failed; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(s) => write!(f, "invalid partition: {s}"),
            Error::NotContained(s) => write!(f, "not contained: {s}"),
            Error::InvalidShape(s) => write!(f, "invalid skew shape: {s}"),
            Error::InvalidTableau(s) => write!(f, "invalid tableau: {s}"),
            Error::InvalidHole(s) => write!(f, "invalid hole: {s}"),
            Error::SizeMismatch {
                alpha,
                beta,
                gamma,
                expected,
            } => write!(
                f,
                "size mismatch: |alpha| = {alpha}, |beta| = {beta}, |gamma| = {gamma}, \
                 but their sum must be {expected} (rows*cols - 1)"
            ),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            Error::Internal(s) => write!(f, "internal error (please report): {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
