use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Inputs that violate a documented precondition: mismatched spaces,
    /// out-of-range parameters, malformed descriptors.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The operation is not defined for this space kind.
    #[error("unsupported operation: {0}")]
    UnsupportedOperation(String),

    /// Degenerate input, e.g. a zero-diameter set where a spread is required,
    /// or an identical pair where a positive distance is required.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A pipeline configuration outside the regime where the construction
    /// is defined.
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    /// A pair of maps fails its required composition identity.
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    /// A point lies outside an operation's domain.
    #[error("domain error: {0}")]
    DomainError(String),

    /// A numeric certification failed; the message carries the violating
    /// witness.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// The sampler could not produce a usable input.
    #[error("search failure: {0}")]
    SearchFailure(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedOperation(msg.into())
    }
}
