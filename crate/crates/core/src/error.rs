use thiserror::Error;

use crate::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(VertexId, VertexId),

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("internal consistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
