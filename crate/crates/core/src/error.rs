use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{beads} beads cannot display a partition of length {length}")]
    BeadCount { beads: usize, length: usize },

    #[error("{core} is not a {e}-core")]
    InvalidCore { core: String, e: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("not exactly divisible, remainder {remainder}")]
    NotDivisible { remainder: String },

    #[error("internal consistency violated: {0}")]
    Internal(String),

    #[error("outside the domain: {0}")]
    Domain(String),

    #[error("oracle bound exceeded: size {size} > {bound}")]
    OracleBound { size: usize, bound: usize },

    #[error("bad input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
