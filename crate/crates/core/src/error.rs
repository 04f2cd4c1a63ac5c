use thiserror::Error;

use crate::graph::{EdgeKey, Triangle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("triangle {0} is not a triangle of the graph")]
    UnknownTriangle(Triangle),
    #[error("edge {0} is not an edge of the graph")]
    UnknownEdge(EdgeKey),
    #[error("graph contains the triangle {0}")]
    NotTriangleFree(Triangle),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    Edgeless,
    #[error("LP pair is not optimal: primal {primal}, dual {dual}")]
    NotOptimal { primal: String, dual: String },
    #[error("complementary slackness violated: {0}")]
    Slackness(String),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad parameter: {0}")]
    BadParam(String),
}

pub type Result<T> = std::result::Result<T, Error>;
