use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),
    #[error("modulus {0} outside supported range 1..={1}")]
    ModulusOutOfRange(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph on {n} vertices exceeds the cap of {cap}")]
    GraphTooLarge { n: usize, cap: usize },
    #[error("difference sets do not partition [1,{half}]: overlapping {overlapping:?}, uncovered {uncovered:?}")]
    PartitionInvalid {
        half: usize,
        overlapping: Vec<usize>,
        uncovered: Vec<usize>,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
