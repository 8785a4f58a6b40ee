use alloc::string::String;

/// Errors raised by graph construction and the decision procedures.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex name must be non-empty")]
    EmptyVertexName,
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0:?} -- {1:?}")]
    DuplicateEdge(String, String),
    #[error("label must be ≥ 2 (got {0})")]
    LabelTooSmall(i64),
    #[error("label {0} exceeds the maximum of {max}", max = crate::MAX_LABEL)]
    LabelTooLarge(i64),
    #[error("graph has {0} vertices, at most {max} are supported", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("X ∪ Y does not cover the vertex set: {0:?} is missing")]
    NotCovering(String),
    #[error("splitting is trivial: one side is the whole vertex set")]
    TrivialSplitting,
    #[error("X ∩ Y does not separate: edge {0:?} -- {1:?} crosses")]
    NotSeparating(String, String),

    #[error("{vertices} vertices exceeds the enumeration cap of {cap}")]
    SizeCap { vertices: usize, cap: usize },
    #[error("graph is not even: edge {0:?} -- {1:?} has label {2}")]
    NotEven(String, String, u32),
    #[error("graph is not an induced labelled subgraph of the given superset")]
    NotInducedSubgraph,
    #[error("contract violation: {0}")]
    Contract(&'static str),
}
