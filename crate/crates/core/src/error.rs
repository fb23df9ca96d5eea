use thiserror::Error;

/// Errors produced by the library and surfaced by the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid flag context n={n}, m={m}: need 1 <= m <= n <= {max}")]
    InvalidContext { n: usize, m: usize, max: usize },

    #[error("{0} is not a positive root of the rank-{1} system")]
    InvalidRoot(String, usize),

    #[error("root {0} lies in the parabolic subsystem and has no edge degree")]
    ParabolicRoot(String),

    #[error("invalid coset representative: {0}")]
    InvalidCosetRep(String),

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("prefix length {k} out of range 1..={m}")]
    PrefixOutOfRange { k: usize, m: usize },

    #[error("coset representatives have different lengths ({0} vs {1})")]
    ContextMismatch(usize, usize),

    #[error("|W^P| = {size} exceeds the size cap {cap}")]
    SizeCap { size: u128, cap: u128 },

    #[error("{0} is not a vertex of the graph")]
    UnknownVertex(String),

    #[error("chain is not consecutive at step {0}")]
    NonConsecutiveChain(usize),

    #[error("degree vector has length {got}, expected {expected}")]
    DegreeLength { got: usize, expected: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(
        "curve neighborhood components disagree: expected [{expected}], computed [{computed}]"
    )]
    ComponentMismatch { expected: String, computed: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
