use thiserror::Error;

/// Crate-wide error type. Domain errors (parity violations, non-realizable
/// codes) are distinguished from malformed input so the CLI can map them to
/// different exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text or structure does not parse / violates a type invariant.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A word pair whose superposition is not a single open curve.
    #[error("not an open meander: {0}")]
    NotAMeander(String),

    /// A Gauss code that admits no planar realization.
    #[error("gauss code is not realizable in the plane: {0}")]
    NotRealizable(String),

    /// An operation applied to operands of the wrong kind (parity, component
    /// count, sign-incompatible ordered codes, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Catalog fixture could not be loaded or parsed.
    #[error("catalog error: {0}")]
    Catalog(String),

    /// Unknown output format or similar usage problem.
    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
