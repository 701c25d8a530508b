use thiserror::Error;

/// Everything that can go wrong while building graphs, computing
/// connectivity or running verification checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge ({0}, {0}) is not allowed in a simple graph")]
    LoopEdge(usize),
    #[error("vertex {vertex} is out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("operation requires a graph with at least {required} vertices, got {actual}")]
    TooFewVertices { required: usize, actual: usize },
    #[error("graph has {actual} vertices, brute-force oracle cap is {cap}")]
    OracleCapExceeded { actual: usize, cap: usize },
    #[error("layer index {index} out of range (left factor has {left_count} vertices)")]
    LayerOutOfRange { index: usize, left_count: usize },
    #[error("connectivity formula requires n >= 3, got n = {0}; compute on the product directly instead")]
    FormulaInapplicable(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(
        "condition (1) violated: |S| = {size} is not below min{{n*kappa, (n-1)*delta}} = {bound}"
    )]
    SeparatorTooLarge { size: usize, bound: usize },
    #[error("condition (2) violated: layer {0} is entirely contained in S")]
    LayerEmptied(usize),
    #[error("quotient graph needs kappa(G) > 0")]
    ZeroConnectivity,
    #[error("no valid separator candidate could be sampled")]
    SamplingFailed,
    #[error("random connected graph unreachable: {0}")]
    ConnectivityUnreachable(String),
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error("unknown check name `{0}`")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
