use thiserror::Error;

/// Errors raised by graph construction and graph-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge label {0} already present")]
    DuplicateEdgeLabel(usize),
    #[error("edge label {0} exceeds the supported maximum of {max}", max = crate::edge_set::MAX_EDGE_LABELS - 1)]
    LabelOutOfRange(usize),
    #[error("edge label {0} is not in the graph")]
    UnknownEdge(usize),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("edge set {0} is not a subset of the graph's edges")]
    EdgeSetNotInGraph(crate::edge_set::EdgeSet),
    #[error("graphs have different edge sets")]
    GroundMismatch,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is connected")]
    NotDisconnected,
    #[error("graph has loops or parallel edges")]
    NotSimple,
    #[error("graph has isolated vertices")]
    IsolatedVertices,
    #[error("invalid component picks: {0}")]
    InvalidPicks(String),
    #[error("vertex pair {{{0}, {1}}} does not separate the graph")]
    NotACut(usize, usize),
    #[error("side is not a union of components of the cut complement")]
    InvalidSide,
    #[error("vertex count {0} exceeds the enumeration limit {1}")]
    EnumerationLimit(usize, usize),
    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
}

/// Errors raised by matroid construction and matroid operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("matroid ground set is empty")]
    EmptyGround,
    #[error("base family is empty")]
    NoBases,
    #[error("base {0} is not a subset of the ground set")]
    BaseOutsideGround(crate::edge_set::EdgeSet),
    #[error("bases have different cardinalities ({0} and {1})")]
    UnequalBaseSizes(usize, usize),
    #[error("rank must be at least 1 to truncate")]
    RankZero,
    #[error("uniform matroid rank {0} exceeds ground size {1}")]
    RankExceedsSize(usize, usize),
    #[error("ground size {0} exceeds the supported maximum of {1}")]
    GroundTooLarge(usize, usize),
}
