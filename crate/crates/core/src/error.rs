use thiserror::Error;

use crate::graph::{Sign, Vertex};

/// Errors raised by the library.
///
/// Variants that describe malformed input carry enough context to be shown to
/// an end user verbatim. [`Error::Invariant`] signals a bug in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("parallel edges {u}-{v} with the same sign {sign}")]
    SameSignParallel { u: Vertex, v: Vertex, sign: Sign },

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("assignment has no side for vertex {0}")]
    MissingSide(Vertex),

    #[error("graph has {n} vertices, brute force is limited to {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("graph is not a forest of cliques")]
    NotForestOfCliques,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("positive edge {u}-{v} inside the part that must be all-negative")]
    PositiveEdge { u: Vertex, v: Vertex },

    #[error("positive triangle {0}-{1}-{2}")]
    PositiveTriangle(Vertex, Vertex, Vertex),

    #[error("induced subgraph has a dually negative cycle {0:?}")]
    DuallyNegativeCycle(Vec<Vertex>),

    #[error("stale rule application: rule {rule} no longer applies with this witness")]
    StaleApplication { rule: u8 },

    #[error("{marked} marked vertices give too many guesses (limit {limit})")]
    GuessSpace { marked: usize, limit: usize },

    #[error("no connected graph after {0} attempts")]
    GenerationFailed(u32),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
