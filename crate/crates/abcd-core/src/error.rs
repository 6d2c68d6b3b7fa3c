use thiserror::Error;

/// Errors produced by the framework.
#[derive(Debug, Error)]
pub enum Error {
    /// A point with the wrong number of coordinates was passed to a landscape.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A configuration field violates a constraint. The message names the field.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// Unknown preset name.
    #[error("unknown preset '{name}' (known presets: {known})")]
    UnknownPreset { name: String, known: String },

    /// Config-file syntax or key error, with 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An operation that requires data was given none.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// Internal bookkeeping guard tripped (bug, not user error).
    #[error("internal error: {0}")]
    Internal(String),

    /// The evaluation budget ran out where the caller required progress.
    #[error("evaluation budget exhausted")]
    BudgetExhausted,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
