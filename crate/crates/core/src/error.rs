use thiserror::Error;

use crate::codes::AtomSort;
use crate::values::WfFailure;

/// Failure inside a seed operation. Never produced on well-formed inputs.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpreadError {
    #[error("null seed invoked")]
    NullSeedInvoked,
    #[error("seed expected {expected}")]
    Shape { expected: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LndtError {
    #[error("ill-formed value: {0}")]
    IllFormed(#[from] WfFailure),
    #[error("sort mismatch: expected {expected}, found {found}")]
    SortMismatch { expected: AtomSort, found: AtomSort },
    #[error(transparent)]
    Spread(#[from] SpreadError),
}
