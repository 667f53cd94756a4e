use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("malformed hypergraph: {0}")]
    MalformedHypergraph(String),

    #[error("vertex index {index} out of range for {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),

    #[error("incidence sequence is not a walk: break between positions {position} and {}", position + 1)]
    NonConsecutiveWalk { position: usize },

    #[error("malformed vertex pairing: {0}")]
    MalformedPairing(String),

    #[error("enumeration would visit {predicted} P1-image tuples, above the cap of {cap}")]
    CapExceeded { predicted: u128, cap: u64 },

    #[error("equivalence class has no members")]
    EmptyClass,

    #[error("hypergraph is not bidirected: edge {edge} has {count} incidences")]
    NotBidirected { edge: String, count: usize },

    #[error("class is not a Boolean lattice: {0}")]
    LatticeViolation(String),

    #[error("determinant oracle is limited to {max} vertices, got {got}")]
    OracleTooLarge { max: usize, got: usize },

    #[error("no contributor dual: {0}")]
    NoDual(String),

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
