use thiserror::Error;

pub type Result<T, E = MetricError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite value {0}")]
    NonFinite(f64),

    #[error("point has no coordinates")]
    EmptyPoint,

    #[error("point {point} is outside the carrier: {reason}")]
    OutsideCarrier { point: String, reason: String },

    #[error("infinite distance: vertices {0} and {1} are not connected")]
    Disconnected(usize, usize),

    #[error("sample is empty")]
    EmptySample,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("projection onto the circle is undefined at its center")]
    ProjectionAtCenter,

    /// Every point of the circle is at the same distance from the query point.
    #[error("every circle point is extremal")]
    AllEquidistant,

    #[error("map is not orthogonal (max deviation {0:e})")]
    NotOrthogonal(f64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
