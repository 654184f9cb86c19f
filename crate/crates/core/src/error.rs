use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, SimError>;

/// Errors produced by the simulation library.
///
/// `Config` maps to exit code 2 in the command-line tool, everything else
/// numerical to exit code 3.
#[derive(Debug, Error)]
pub enum SimError {
    /// A configuration file or input value failed validation.
    #[error("config error at `{key}`: {message}")]
    Config { key: String, message: String },

    /// A physical precondition on an operation's inputs was violated.
    #[error("invalid input: {0}")]
    Domain(String),

    /// A numerical procedure failed its own validation (non-convergence,
    /// coverage, bracketing, tail mass, ...).
    #[error("numerical validation failed: {0}")]
    Numerics(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl SimError {
    pub fn config(key: impl Into<String>, message: impl Into<String>) -> Self {
        SimError::Config {
            key: key.into(),
            message: message.into(),
        }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        SimError::Domain(message.into())
    }

    pub fn numerics(message: impl Into<String>) -> Self {
        SimError::Numerics(message.into())
    }
}
