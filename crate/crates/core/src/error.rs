use thiserror::Error;

/// Errors raised by graph construction, colorers, the exact solver and the
/// bound evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("loop at vertex {0} not allowed in a simple graph")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("disconnected")]
    Disconnected,
    #[error("non-eulerian: vertex {0} has odd degree")]
    NonEulerian(usize),
    #[error("empty set")]
    EmptySet,
    #[error("color set element {element} outside 1..={t}")]
    ColorOutOfRange { element: u32, t: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not bipartite")]
    NotBipartite,
    #[error("not a tree")]
    NotATree,
    #[error("unsupported order {0}: only prime orders are constructed")]
    UnsupportedOrder(u32),
    #[error("edge {0} is uncolored")]
    UncoloredEdge(usize),
    #[error("improper coloring: edges {0} and {1} share an endpoint and color")]
    ImproperColoring(usize, usize),
    #[error("coloring covers {found} edges, graph has {expected}")]
    ColoringSizeMismatch { expected: usize, found: usize },
    #[error("adjacent max-degree vertices {0} and {1}")]
    AdjacentMaxDegree(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("claim failure: {0}")]
    ClaimFailure(String),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
