use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("graph is not regular (degrees range over {min}..={max})")]
    NotRegular { min: usize, max: usize },

    #[error("graphs have different degrees ({0} and {1})")]
    DegreeMismatch(usize, usize),

    #[error("malformed degree sequence: {0}")]
    MalformedDegrees(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("n*r must be even (n = {n}, r = {r})")]
    Parity { n: usize, r: usize },

    #[error("point {0} lies outside the region")]
    PointOutsideRegion(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("sampling rejection budget exhausted after {0} attempts")]
    RejectionBudgetExhausted(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
