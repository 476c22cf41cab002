use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("graphs have different vertex counts ({x} vs {y})")]
    SizeMismatch { x: usize, y: usize },

    #[error("instance too large: n = {n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("graph is not biconnected")]
    NotBiconnected,

    #[error("graph is not connected")]
    NotConnected,

    #[error("{0} is not a simple cycle of the graph")]
    NotACycle(String),

    #[error("{0}")]
    Precondition(String),

    #[error("state budget exceeded: {visited} states (cap {cap})")]
    Budget { visited: usize, cap: usize },

    #[error("trajectory step {index}: edge ({u},{v}) is not incident to the moving token at {at}")]
    BadStep { index: usize, u: usize, v: usize, at: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
