//! Shared error type for the core crate.

use alloc::string::String;
use alloc::vec::Vec;

/// Errors surfaced by the numeric core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoreError {
    /// Two operands had incompatible shapes; both are reported.
    #[error("{op}: shape mismatch, lhs {lhs:?} vs rhs {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },
    /// An argument violated a documented precondition.
    #[error("{0}")]
    InvalidArgument(String),
    /// Backward was requested on a value that is not a scalar.
    #[error("backward requires a scalar loss, got shape {0:?}")]
    NonScalarLoss(Vec<usize>),
    /// An optimizer step saw a non-finite gradient for the named parameter.
    #[error("non-finite gradient for parameter `{0}`")]
    NonFiniteGradient(String),
    /// The training loop produced a non-finite loss and aborted.
    #[error("non-finite loss at step {0}; run aborted")]
    NonFiniteLoss(u64),
    /// A checkpoint byte stream could not be decoded.
    #[error("checkpoint decode failed: {0}")]
    CheckpointDecode(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, CoreError>;

impl CoreError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CoreError::InvalidArgument(msg.into())
    }
}
