use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad input values: out-of-range parameters, malformed structures.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A configured cap (vertex count, factorial enumeration, walk length) was hit.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    /// An internal consistency check failed; indicates a bug, never a property of the input.
    #[error("internal anomaly: {0}")]
    Anomaly(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
