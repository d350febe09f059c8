use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} is not in 1..={n}")]
    InvalidVertex { v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {{{0}, {1}}} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("identified vertex set is not a clique in both graphs")]
    NotAClique,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is not connected")]
    NotConnected,
    #[error("{what} needs n <= {cap}, got n = {n}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("not a permutation of the vertex set")]
    BadPermutation,
    #[error("malformed graph JSON: {0}")]
    Json(String),
}
