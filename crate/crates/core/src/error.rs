use crate::graph::Edge;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid k-tree build: {0}")]
    InvalidBuild(String),

    #[error("{what} of size {size} exceeds the exact-search limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("edge {0} is not an edge of the graph")]
    InvalidEdge(Edge),

    #[error("malformed layout: {0}")]
    MalformedLayout(String),

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("invalid leveled embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("chord conflict graph is not bipartite for this order; odd cycle {}", fmt_edges(.odd_cycle))]
    NotTwoPageEmbeddable { odd_cycle: Vec<Edge> },

    #[error("edges {0} and {1} cross, so the graph is not outerplanar for this boundary")]
    NotOuterplanar(Edge, Edge),

    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("paths {0} and {1} are neither crossing nor separated; the order is not monotone on the retained leaves")]
    MonotonicityViolation(usize, usize),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn fmt_edges(edges: &[Edge]) -> String {
    edges
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
