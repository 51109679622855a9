use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("arity error at position {pos}: {message}")]
    Arity { pos: usize, message: String },
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error(transparent)]
    Core(#[from] w22_core::Error),
    #[error("malformed JSON value: {0}")]
    Json(String),
}
