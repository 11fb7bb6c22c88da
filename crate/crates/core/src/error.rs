use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph would have {requested} vertices, capacity is 64")]
    Capacity { requested: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("edge {u}-{v} listed more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("adjacency not symmetric: {v} is a neighbor of {u} but not vice versa")]
    Asymmetric { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("graph6 data truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph has {n} vertices, capacity is 64")]
    Oversize { n: usize },
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 data has {extra} trailing bytes")]
    TrailingData { extra: usize },
    #[error("graph6 padding bits are not zero")]
    NonzeroPadding,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("invalid vertex list {0:?}")]
    VertexList(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SigmaError {
    #[error("naive oracle is capped at {cap} vertices, graph has {n}")]
    OracleCapacity { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumerationError {
    #[error("exhaustive enumeration is capped at n = {cap}, requested {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
}
