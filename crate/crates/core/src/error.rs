use thiserror::Error;

use crate::exactlin::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("quiver: {0}")]
    Quiver(String),
    #[error("shape: {0}")]
    Shape(String),
    #[error("not a morphism: {0}")]
    NotCommuting(String),
    #[error("sequence is not short exact: {0}")]
    NotExact(String),
    #[error("not a member of the category: {0}")]
    NotMember(String),
    #[error("not idempotent: {0}")]
    NotIdempotent(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("bounded search inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Returns `Error::Assertion(msg)` unless `cond` holds.
pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Assertion(msg()))
    }
}
