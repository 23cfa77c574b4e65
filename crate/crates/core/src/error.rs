use crate::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    InvalidVertex { vertex: u64, n: usize },

    #[error("self-loop on vertex {vertex}{}", line_suffix(*.line))]
    SelfLoopRejected { vertex: VertexId, line: Option<usize> },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex sequence is not a cycle: {0}")]
    NotACycle(String),

    #[error("vertex set does not induce a path or cycle: {0}")]
    NotInduced(String),

    #[error("path store capacity {capacity} exceeded ({requested} rows requested)")]
    CapacityExceeded { capacity: usize, requested: usize },

    #[error("graph has {n} vertices, brute-force bound is {bound}")]
    InputTooLarge { n: usize, bound: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

fn line_suffix(line: Option<usize>) -> String {
    match line {
        Some(l) => format!(" (line {l})"),
        None => String::new(),
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
