//! Crate error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must live in the same space do not.
    #[error("dimension mismatch in {context}: expected {expected}, got {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    /// A text input could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Unknown builtin algebra name.
    #[error("unknown builtin algebra `{0}`")]
    UnknownBuiltin(String),

    /// Builtin constructor called with an invalid size parameter.
    #[error("invalid size for builtin: {0}")]
    InvalidSize(String),

    /// A structure table was malformed at construction time.
    #[error("invalid structure table: {0}")]
    InvalidTable(String),

    /// Graded bracket of operators without a determinate parity.
    #[error("operator has mixed parity; {0}")]
    MixedParity(&'static str),

    /// A polynomial operation would exceed the configured degree budget.
    #[error("degree budget exceeded: needed {needed}, budget {budget}")]
    BudgetExceeded { needed: usize, budget: usize },

    /// The requested computation is not defined for this input.
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    /// An operator handed to a check does not belong to the required space.
    #[error("operator not a member of {0}")]
    NotAMember(&'static str),

    /// Internal invariant violated; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(&'static str),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
