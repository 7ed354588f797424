use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime below 65536")]
    InvalidModulus(u32),

    #[error("field mismatch: F_{left} vs F_{right}")]
    FieldMismatch { left: u32, right: u32 },

    #[error("block index {index} out of range 1..={beta}")]
    BlockOutOfRange { index: usize, beta: usize },

    #[error("vertices have different block sizes ({left} vs {right})")]
    BetaMismatch { left: usize, right: usize },

    #[error("bit string has length {len}, expected {expected}")]
    BadLength { len: usize, expected: usize },

    #[error("an edge needs two distinct endpoints")]
    LoopEdge,

    #[error("clique size {p} exceeds vertex count {n}")]
    CliqueTooLarge { p: usize, n: usize },

    #[error("lower bound needs n >= 5 (got n = {0})")]
    Domain(u64),

    #[error("malformed pattern {name:?}: {reason}")]
    MalformedPattern { name: String, reason: String },

    #[error("unknown pattern name {0:?}")]
    UnknownPattern(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] io::Error),
}
