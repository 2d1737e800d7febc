use thiserror::Error;

use crate::game::IllegalMove;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Formula text did not match the grammar.
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    /// Model text was malformed or inconsistent.
    #[error("model error at {location}: {message}")]
    Model { location: String, message: String },

    #[error("state {state} out of range (model has {count} states)")]
    InvalidState { state: usize, count: usize },

    #[error("modal index {index} out of range (model has {count} relations)")]
    InvalidIndex { index: usize, count: usize },

    #[error("{what}: estimated {estimate} exceeds budget {limit}")]
    Budget { what: String, estimate: u128, limit: u128 },

    #[error("unbound variable {0}")]
    UnboundVariable(String),

    #[error("unsupported construct: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("illegal move: {0}")]
    IllegalMove(IllegalMove),
}

impl Error {
    /// Short machine-readable category, used as the prefix of CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::Model { .. } => "model",
            Error::InvalidState { .. } | Error::InvalidIndex { .. } => "argument",
            Error::Budget { .. } => "budget",
            Error::UnboundVariable(_) => "eval",
            Error::Unsupported(_) => "unsupported",
            Error::InvalidArgument(_) => "argument",
            Error::IllegalMove(_) => "illegal-move",
        }
    }

    pub(crate) fn model(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Model {
            location: location.into(),
            message: message.into(),
        }
    }
}
