use thiserror::Error;

/// Errors produced by the form algebra, the space constructions and the
/// verification drivers.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation was called outside of its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A mesh description failed validation.
    #[error("non-conforming mesh: cells {first} and {second}: {reason}")]
    NonConforming {
        first: usize,
        second: usize,
        reason: String,
    },

    /// Malformed input data (JSON, mesh spec strings, rationals).
    #[error("invalid input: {0}")]
    Input(String),

    /// An exact linear system that must be nonsingular was singular.
    #[error("singular system: {0}")]
    Singular(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
