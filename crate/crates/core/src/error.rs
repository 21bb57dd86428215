use thiserror::Error;

use crate::coloring::WType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopRejected(usize),
    #[error("vertex {vertex} out of range 1..={max}")]
    VertexOutOfRange { vertex: usize, max: usize },
    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("coloring is not total: {0}")]
    ColoringIncomplete(String),
    #[error("coloring is not a set-ordered graceful total coloring")]
    NotSetOrderedGraceful,
    #[error("coloring is not the odd image of a set-ordered graceful total coloring")]
    NotSetOrderedOddGraceful,

    #[error("mapping is not total: {0}")]
    MappingIncomplete(String),
    #[error("mapping is not a graph homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("vertex set does not induce a subgraph: {0}")]
    NotSubgraph(String),

    #[error("seed graph is disconnected")]
    SeedDisconnected,
    #[error("stage mismatch: {0}")]
    StageMismatch(String),
    #[error("vertex {vertex} has no fold target over edge {edge:?}")]
    NoFoldTarget { vertex: usize, edge: (usize, usize) },

    #[error("modulus must be at least 1, got {0}")]
    BadModulus(i64),
    #[error("element index {index} outside 1..={modulus}")]
    BadIndex { index: i64, modulus: u32 },
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("duplicate join pair {0:?}")]
    DuplicateJoin((usize, usize)),
    #[error("join spec is empty")]
    EmptyJoinSpec,
    #[error("lattice element has no base terms")]
    EmptyElement,
    #[error("base index {index} outside 1..={len}")]
    BadBaseIndex { index: usize, len: usize },

    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("invalid topcode matrix: {0}")]
    MatrixInvalid(String),
    #[error("string of {len} digits cannot split into {cells} tokens of width 1..={max_width}")]
    LengthInfeasible { len: usize, cells: usize, max_width: usize },
    #[error("operation not defined for W-type {0}")]
    UnsupportedWType(WType),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
