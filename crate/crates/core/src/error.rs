use thiserror::Error;

use crate::graphicality::GraphicVerdict;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative degree {value} at index {index}")]
    NegativeDegree { index: usize, value: i64 },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("delta {delta} exceeds n = {n}")]
    DeltaExceedsN { delta: usize, n: usize },

    #[error("delta must be at least 1")]
    DeltaTooSmall,

    #[error("delta {0} is odd")]
    OddDelta(usize),

    #[error("sequence entry would go negative at index {0}")]
    WouldGoNegative(usize),

    #[error("sequence is not graphic")]
    NotGraphic(GraphicVerdict),

    #[error("sequence has no positive entry")]
    AllZero,

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),

    #[error("not a matching of the host graph: {0}")]
    NotASubMatching(String),

    #[error("swap precondition violated: {0}")]
    SwapPrecondition(String),

    #[error("instance too large for {what}: {actual} > cap {cap}")]
    CapExceeded { what: &'static str, actual: usize, cap: usize },

    #[error("delta {delta} is infeasible; feasible: {feasible:?}")]
    InfeasibleDelta { delta: usize, feasible: Vec<usize> },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency: {0}")]
    Consistency(String),
}

impl Error {
    /// Stable short code used as the machine-readable CLI error prefix.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NegativeDegree { .. } => "negative-degree",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::DeltaExceedsN { .. } => "delta-exceeds-n",
            Error::DeltaTooSmall => "delta-too-small",
            Error::OddDelta(_) => "odd-delta",
            Error::WouldGoNegative(_) => "would-go-negative",
            Error::NotGraphic(_) => "not-graphic",
            Error::AllZero => "all-zero",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::InvalidEdge(..) => "invalid-edge",
            Error::NotASubMatching(_) => "not-a-submatching",
            Error::SwapPrecondition(_) => "swap-precondition",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::InfeasibleDelta { .. } => "infeasible-delta",
            Error::InvalidFamily(_) => "invalid-family",
            Error::Parse(_) => "parse",
            Error::Consistency(_) => "consistency",
        }
    }
}
