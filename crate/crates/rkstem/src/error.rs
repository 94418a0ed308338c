//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid state {0}")]
    InvalidState(usize),

    #[error("machine has no initial state")]
    NoInitialState,

    #[error("{context}: {message}")]
    Parse { context: String, message: String },

    #[error("unknown symbol {symbol:?} in {context}")]
    UnknownSymbol { symbol: String, context: String },

    #[error("duplicate archive entry {0:?}")]
    DuplicateEntry(String),

    #[error("missing archive entry {0:?}")]
    MissingEntry(String),

    #[error("not regulated under enumeration: machine is cyclic, bound the path length (pair {input}, {output})")]
    NotRegulated { input: String, output: String },

    #[error("operation requires an acyclic machine")]
    Cyclic,

    #[error("label {0} outside declared alphabet")]
    LabelOutOfRange(u32),

    #[error("{0}")]
    Config(String),

    #[error("gram matrix mismatch: {0}")]
    KernelMismatch(String),

    #[error("model mismatch: {0}")]
    ModelMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}
