use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// What went wrong on a particular line of a text input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header line")]
    MissingHeader,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("weight {0} outside 1..=2^63-1")]
    BadWeight(u64),
    #[error("duplicate edge {{{0}}}")]
    DuplicateEdge(Edge),
    #[error("duplicate weight {weight} (already used by edge {{{previous}}})")]
    DuplicateWeight { weight: u64, previous: Edge },
    #[error("header declares {declared} entries but the body disagrees")]
    EdgeCount { declared: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}}}")]
    DuplicateEdge(Edge),

    #[error("weight {0} outside 1..=2^63-1")]
    InvalidWeight(u64),

    #[error("weight {weight} used by both {{{first}}} and {{{second}}}")]
    DuplicateWeight {
        weight: u64,
        first: Edge,
        second: Edge,
    },

    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("cannot remove every vertex of the graph")]
    RemovesAllVertices,

    #[error("source and target are the same vertex {0}")]
    SameEndpoints(usize),

    #[error("vertices {} and {} are adjacent; a vertex separator needs non-adjacent endpoints", .0.u(), .0.v())]
    Adjacent(Edge),

    #[error("cap must be at least 1")]
    ZeroCap,

    #[error("graph is disconnected: vertices {u} and {v} are not joined by any path")]
    Disconnected { u: usize, v: usize },

    #[error("not a spanning tree: {0}")]
    NotATree(String),

    #[error("k = {k} out of range {min}..={max}")]
    KOutOfRange {
        k: usize,
        min: usize,
        max: usize,
    },

    #[error("M_{k} is undefined: deleting {separator:?} separates {u} from {v}")]
    NotKConnected {
        k: usize,
        u: usize,
        v: usize,
        separator: Vec<usize>,
    },

    #[error("brute force needs about {required} units of work, above the limit {limit}; use the fast method")]
    WorkLimit { required: u128, limit: u128 },

    #[error("induced subgraph after deleting {removed:?} is disconnected")]
    DisconnectedSubgraph { removed: Vec<usize> },

    #[error("order is not a {k}-construction order: edge #{index} {{{edge}}} joins vertices that are already {connectivity}-connected")]
    InvalidOrder {
        k: usize,
        index: usize,
        edge: Edge,
        connectivity: usize,
    },

    #[error("invariant violated: |M_{k}| = {size} exceeds bound {bound} on n = {n}")]
    BoundExceeded {
        n: usize,
        k: usize,
        size: usize,
        bound: usize,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that mean a mathematical invariant failed, as opposed
    /// to bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. } | Error::Invariant(_))
    }
}
