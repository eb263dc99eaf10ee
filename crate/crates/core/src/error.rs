use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("disjoint union of an empty list")]
    EmptyUnion,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("({r}|{chi}) is not a feasible pair: need 2 <= chi <= r + 1 (or r = 0, chi = 1)")]
    Infeasible { r: usize, chi: usize },
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("order {n} exceeds the limit of {limit} for {what}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("invalid connection set: {0}")]
    ConnectionSet(String),
    #[error("no {r}-regular graphs on {n} vertices (parity)")]
    Parity { n: usize, r: usize },
    #[error("census error at {location}: {message}")]
    Census { location: String, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
