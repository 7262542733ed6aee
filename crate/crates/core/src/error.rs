use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("vertex {vertex} is out of range 1..={count}")]
    OutOfRange { vertex: usize, count: usize },

    #[error("graph must have at least one vertex")]
    NoVertices,

    #[error("operation needs at least two vertices")]
    TooSmall,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix entry count {len} does not match {rows}x{cols}")]
    Shape { rows: usize, cols: usize, len: usize },

    #[error("total edge multiplicity {total} exceeds enumeration limit {limit}")]
    TooLarge { total: u64, limit: u64 },

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("argument list is empty")]
    EmptyArgs,

    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
