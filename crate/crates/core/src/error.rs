use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A generator or formula was given parameters outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An instance exceeds a documented exact-search limit.
    #[error("instance too large for {what}: {actual} exceeds limit {limit}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A vertex sequence that should be a permutation is not one.
    #[error("not a permutation of the vertex set: {0}")]
    NotAPermutation(String),

    /// An ordering failed verification for the requested elimination family.
    #[error("ordering is not a valid {0} elimination ordering")]
    InvalidOrdering(&'static str),

    /// A weight map references a clique that is not a t-clique of the graph.
    #[error("weight map entry {0} is not a {1}-clique of the graph")]
    ForeignWeightKey(String, usize),

    /// A solution passed as input fails its feasibility contract.
    #[error("infeasible input solution: {0}")]
    InfeasibleInput(String),

    /// Malformed text input (edge lists, weight files, orderings).
    #[error("parse error: {0}")]
    Parse(String),

    /// Underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
