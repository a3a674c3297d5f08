use thiserror::Error;

/// Errors shared by the geometry, formula and construction layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("unachievable: {0}")]
    Unachievable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
