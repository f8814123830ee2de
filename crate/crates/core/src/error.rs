use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("s and t must differ (both are {0})")]
    SameEndpoints(usize),

    #[error("graph on {n} vertices exceeds the capacity of {algorithm} (limit {limit})")]
    Capacity {
        algorithm: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("dynamic program needs {needed} bytes, ceiling is {ceiling} bytes")]
    Memory { needed: u64, ceiling: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction check failed: {0}")]
    Construction(String),

    #[error("fixture {name} (House of Graphs {hog}): {reason}")]
    Fixture {
        name: String,
        hog: String,
        reason: String,
    },

    #[error("stream record {index}: {reason}")]
    Record { index: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
