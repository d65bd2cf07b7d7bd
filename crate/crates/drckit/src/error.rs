use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Input tables are structurally broken (entry out of range, wrong shape).
    #[error("malformed input: {0}")]
    Malformed(String),

    /// Text document could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A caller-supplied value breaks the contract of an operation.
    #[error("contract violated: {0}")]
    Contract(String),

    /// Partial composition applied to arrows with mismatched endpoints.
    #[error("undefined composition: {0}")]
    UndefinedComposition(String),

    /// Exhaustive enumeration asked to exceed its complexity guard.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
