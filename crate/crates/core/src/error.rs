use thiserror::Error;

/// Errors surfaced by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// Shape or ring mismatch between operands.
    #[error("structural error: {0}")]
    Structure(String),
    /// Invalid user input (non-homogeneous relation, bad matrix size, ...).
    #[error("input error: {0}")]
    Input(String),
    #[error("no regular sequence found after {0} candidates")]
    NoRegularSequence(usize),
    #[error("sequence not a system of parameters")]
    NotSystemOfParameters,
    #[error("not a complete intersection")]
    NotCompleteIntersection,
    /// A step that must succeed on exact input did not (e.g. chain-map lift).
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
