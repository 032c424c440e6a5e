//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed input text (group spec strings, Cayley-table files).
    #[error("parse error: {0}")]
    Parse(String),

    /// Arguments that fail a constructor precondition.
    #[error("invalid argument: {0}")]
    Validation(String),

    /// Structurally incompatible operands (length or degree mismatch).
    #[error("structural error: {0}")]
    Structural(String),

    /// Index outside the valid range of a table or point set.
    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    /// Group closure exceeded the configured cap.
    #[error("group too large: closure reached {reached} elements (cap {cap})")]
    GroupTooLarge { reached: usize, cap: usize },

    /// Element claimed to belong to a group it is not a member of.
    #[error("membership error: {0}")]
    Membership(String),

    /// A structural claim that should always hold failed on concrete data.
    #[error("prediction violated: {0}")]
    PredictionViolated(String),

    /// A numerical value failed its integer-rounding or residual gate.
    #[error("tolerance exceeded: {0}")]
    Tolerance(String),

    /// Inconsistency that indicates a bug rather than bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}
