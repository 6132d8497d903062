use thiserror::Error;

/// Errors surfaced by the solver toolkit.
#[derive(Error, Debug)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("infeasible instance: {0}")]
    InfeasibleInstance(String),

    /// An augmentation phase exhausted every reachable V-vertex without
    /// finding a free one.
    #[error("no perfect matching on U (augmentation from u={u} failed)")]
    NoPerfectMatching { u: usize },

    #[error("capacity infeasible: {m} partitions x capacity {ubar} < {n} items")]
    CapacityInfeasible { m: usize, ubar: usize, n: usize },

    #[error("enumeration too large: {0}")]
    TooLarge(String),

    #[error("invalid instance spec: {0}")]
    SpecInvalid(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
