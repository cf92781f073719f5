use thiserror::Error;

/// Errors produced while building or analyzing a leader-follower network.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("node {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("leader {leader} out of range for a graph with {n} nodes")]
    LeaderOutOfRange { leader: usize, n: usize },
    #[error("leader {0} listed more than once")]
    DuplicateLeader(usize),
    #[error("leader set is empty")]
    EmptyLeaderSet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid distance sequence: {0}")]
    InvalidSequence(String),
    #[error("vector set of size {size} exceeds brute-force cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("bounds out of order: lower {lower}, rank {rank}, upper {upper}")]
    SandwichViolation { lower: usize, rank: usize, upper: usize },
    #[error("step {dt} exceeds stability limit {limit}")]
    UnstableStep { dt: f64, limit: f64 },
    #[error("invalid input schedule: {0}")]
    InvalidSchedule(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no connected graph after {0} attempts")]
    ConnectivityRetriesExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Parse and usage problems map to 1, domain failures to 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::SelfLoop(_)
            | Error::DuplicateEdge(..)
            | Error::NodeOutOfRange { .. }
            | Error::LeaderOutOfRange { .. }
            | Error::DuplicateLeader(_)
            | Error::EmptyLeaderSet
            | Error::InvalidParams(_)
            | Error::InvalidSchedule(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
