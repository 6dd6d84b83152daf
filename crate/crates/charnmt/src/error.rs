//! Crate-wide error type.
//!
//! Every fallible contract in the toolkit funnels into [`Error`]; the CLI
//! maps the variants onto process exit codes (usage/config = 1, data = 2,
//! numerical abort = 3).

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Operand shapes do not fit the operation; names both shapes.
    #[error("{op}: shape mismatch between {lhs:?} and {rhs:?}")]
    Shape {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// A caller-side precondition was violated.
    #[error("{0}")]
    Precondition(String),

    /// An index (token id, target class, ...) is out of range.
    #[error("{what}: index {index} out of range (< {bound} required)")]
    Index {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    /// An API usage contract was broken (e.g. backward called twice).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Bad configuration (invalid key, value, or combination).
    #[error("config error: {0}")]
    Config(String),

    /// Malformed or misaligned input data.
    #[error("data error: {0}")]
    Data(String),

    /// Non-finite values encountered during training or optimization.
    #[error("numerical abort: {0}")]
    Numeric(String),

    /// A checkpoint file failed validation on load.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code the CLI reports for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Precondition(_) | Error::Contract(_) => 1,
            Error::Data(_) | Error::Io { .. } | Error::Checkpoint(_) | Error::Index { .. } => 2,
            Error::Numeric(_) => 3,
            Error::Shape { .. } => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
