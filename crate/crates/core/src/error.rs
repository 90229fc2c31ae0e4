use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) references a node outside 0..{2}")]
    NodeOutOfRange(usize, usize, usize),
    #[error("line {line}: self-loop on `{label}`")]
    ParseSelfLoop { line: usize, label: String },
    #[error("line {line}: expected `labelA labelB` or `node label`, got `{text}`")]
    ParseMalformed { line: usize, text: String },
    #[error("input declares no nodes")]
    ParseEmpty,
    #[error("graph is disconnected; distances are undefined")]
    Disconnected,
    #[error("operation needs at least {needed} nodes, graph has {actual}")]
    TooFewNodes { needed: usize, actual: usize },
    #[error("enumeration size {n} outside supported range {min}..={max}")]
    EnumerationBound { n: usize, min: usize, max: usize },
    #[error("arrays have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("array is not sorted in decreasing order")]
    NotDecreasing,
    #[error("array contains a negative or non-finite entry")]
    NegativeEntry,
    #[error("array sum is zero")]
    ZeroSum,
    #[error("power exponent must be > 1, got {0}")]
    InvalidExponent(f64),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("{family} cannot realize N = {n}: {constraint}")]
    Unrealizable {
        family: String,
        n: usize,
        constraint: String,
    },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),
    #[error("unknown fixture group `{0}`")]
    UnknownGroup(String),
    #[error("search needs at least one constraint")]
    NoConstraint,
}

pub type Result<T> = std::result::Result<T, Error>;
