use thiserror::Error;

/// Errors produced by matroid construction, hypergraph extraction and search.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set exceeds 64 (got {0})")]
    GroundSetTooLarge(usize),

    #[error("element {elem} out of range for ground set of size {n}")]
    ElementOutOfRange { elem: usize, n: usize },

    #[error("invalid rank {rank} for ground set of size {n}")]
    InvalidRank { rank: usize, n: usize },

    #[error("no colines: rank {0} is below 2")]
    NoColines(usize),

    #[error("invalid basepoint: {0}")]
    InvalidBasepoint(String),

    #[error("invalid minor: deleted and contracted sets intersect")]
    InvalidMinor,

    #[error("unsupported field order {0} (need a prime power at most 32)")]
    UnsupportedField(u32),

    #[error("invalid Steiner system: {0}")]
    InvalidSteiner(String),

    #[error("unknown builtin Steiner system {0:?}")]
    UnknownSteiner(String),

    #[error("not a matroid: {0}")]
    NotAMatroid(String),

    #[error("degenerate view: {0}")]
    DegenerateView(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("inconclusive after {nodes} nodes (best rainbow-free block count so far {best})")]
    Inconclusive { nodes: u64, best: usize },

    #[error("theorem not applicable: {0}")]
    NotApplicable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("counterexample found: {0}")]
    Counterexample(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
