use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph with {order} vertices exceeds the 16-bit distance range")]
    TooLarge { order: usize },
    #[error("invalid edge ({u}, {v}) for a graph of order {order}")]
    InvalidEdge { u: usize, v: usize, order: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is not connected ({components} components)")]
    NotConnected { components: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} requires {param} >= {min}, got {got}")]
    ParamTooSmall {
        family: &'static str,
        param: &'static str,
        min: usize,
        got: usize,
    },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("landmark {vertex} is not a vertex of a graph of order {order}")]
    InvalidLandmark { vertex: usize, order: usize },
    #[error("landmark {0} appears more than once")]
    DuplicateLandmark(usize),
    #[error("landmark set must not be empty")]
    EmptyLandmarks,
    #[error("landmark set needs at least {min} vertices, got {got}")]
    TooFewLandmarks { min: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("vertex {vertex} is covered by no printed row")]
    RangeGap { vertex: String },
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(usize),
}
