use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph family parameters: {0}")]
    InvalidFamily(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge list parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has isolated vertex {0}; domination parameters require an isolate-free graph")]
    IsolatedVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not a tree: {0}")]
    NotATree(String),

    #[error("graph of order {n} exceeds the limit of {limit} vertices for {what}")]
    TooLarge {
        n: usize,
        limit: usize,
        what: &'static str,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
