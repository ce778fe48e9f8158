use thiserror::Error;

/// Errors raised by graph construction and the operations on plane graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range (p = {p})")]
    VertexOutOfRange { v: usize, p: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("non-symmetric adjacency: {u} lists {v} but {v} does not list {u}")]
    NonSymmetricAdjacency { u: usize, v: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("rotation system is not genus zero: p={p}, q={q}, f={f}")]
    NotGenusZero { p: usize, q: usize, f: usize },
    #[error("graph too small: p={p}")]
    TooSmall { p: usize },
    #[error("bad pseudo double wheel arity {got}: need an even number >= 8")]
    BadArity { got: usize },
    #[error("dual has a multi-edge (faces {f1} and {f2} share more than one edge); input not 3-connected")]
    MultiEdgeInDual { f1: usize, f2: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not a quadrangulation")]
    NotQuadrangulation,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("invalid split triple ({u1},{u2},{u3}): {reason}")]
    InvalidTriple { u1: usize, u2: usize, u3: usize, reason: &'static str },
    #[error("face across {u2}-{u3} contains {u1}; split would break the embedding")]
    AcrossFaceContainsU1 { u1: usize, u2: usize, u3: usize },
    #[error("invalid transformation position: {0}")]
    InvalidPosition(&'static str),
    #[error("bad n = {n}: need n >= {min}")]
    BadN { n: usize, min: usize },
    #[error("degree tuple entry {entry} below four")]
    EntryBelowFour { entry: usize },
    #[error("graph is not polyhedral (planar 3-connected, p >= 4)")]
    NotPolyhedral,
    #[error("bad graph file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
