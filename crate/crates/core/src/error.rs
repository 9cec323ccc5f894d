use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} references vertex {vertex}, which is not in the graph")]
    DanglingEndpoint { edge: EdgeId, vertex: VertexId },
    #[error("duplicate identifier {0}")]
    DuplicateId(String),
    #[error("edge {0} has type 0; edge types are positive integers")]
    NonPositiveType(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("graph contains a directed cycle")]
    NotCycleFree,
    #[error("partition block {0:?} does not induce a connected subgraph")]
    BlockNotConnected(Vec<VertexId>),
    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),
    #[error("tensor arity {0} is outside the supported range")]
    ArityOutOfRange(usize),
    #[error("the antipode is undefined in bialgebra mode (residues are grouplike and not invertible)")]
    NotAHopfAlgebra,
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("malformed JSON document: {0}")]
    Json(String),
}
