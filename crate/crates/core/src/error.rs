use thiserror::Error;

/// Malformed textual input (words, presentations, matrices, group specs).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message}")]
pub struct ParseError {
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError { message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    /// The coset table did not close. Says nothing about finiteness.
    #[error("coset enumeration did not close within {limit} cosets (raise --max-cosets)")]
    EnumerationLimit { limit: usize },
    #[error("group order exceeds the cap of {cap} elements (raise --max-order)")]
    OrderCap { cap: usize },
    #[error("the pair ({gx}, {gy}) does not generate the group")]
    NotSurjective { gx: usize, gy: usize },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
