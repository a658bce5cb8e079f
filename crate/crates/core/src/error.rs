use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid search space: {0}")]
    InvalidSpace(String),
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("unknown benchmark `{0}`")]
    UnknownBenchmark(String),
    #[error("unknown tag `{0}`")]
    UnknownTag(String),
    #[error("parameter `{name}` for {algorithm}: {reason}")]
    InvalidParameter {
        algorithm: String,
        name: String,
        reason: String,
    },
    #[error("{0} performed an iteration without evaluating anything")]
    Stalled(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn check_len(what: &str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(invalid(format!(
            "{what}: length mismatch (expected {expected}, got {got})"
        )))
    }
}
