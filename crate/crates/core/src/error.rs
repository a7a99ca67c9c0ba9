use thiserror::Error;

/// Errors raised by the arithmetic, sequence and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("ring mode mismatch")]
    RingModeMismatch,

    #[error("algebra mismatch")]
    AlgebraMismatch,

    #[error("fast engine requires n ≥ 0")]
    NegativeFastIndex,

    #[error("{what} requires n ≥ 0, got {n}")]
    NegativeIndex { what: &'static str, n: i64 },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown constant `{0}`")]
    UnknownConstant(String),

    #[error("malformed parameters for {id}: {reason}")]
    MalformedParams { id: &'static str, reason: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
