use crate::graph::NodeId;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not an interval graph")]
    NotInterval,
    #[error("graph is not a proper interval graph")]
    NotProperInterval,
    #[error("instance too large for exhaustive search: {n} nodes, limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("node {0} is not in the graph")]
    UnknownNode(NodeId),
    #[error("local view radius {0} is below the minimum of 2")]
    RadiusTooSmall(usize),
    #[error("internal path has diameter {diameter}, at least 4 is required")]
    DiameterTooSmall { diameter: usize },
    #[error("no coloring within budget {budget} extends the fixed colors")]
    Infeasible { budget: u32 },
    #[error("epsilon {0} is outside the admissible range")]
    BadEpsilon(f64),
    #[error("epsilon {eps} is below 2/omega = {min}")]
    EpsilonTooSmall { eps: f64, min: f64 },
    #[error("independence number reached {alpha}, limit is {limit}")]
    AlphaTooLarge { alpha: usize, limit: usize },
    #[error("pruning did not terminate within {0} iterations")]
    NonTermination(usize),
    #[error("round cap {cap} exceeded")]
    RoundCapExceeded { cap: u32 },
    #[error("parse error on line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("bad generator spec: {0}")]
    BadSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
