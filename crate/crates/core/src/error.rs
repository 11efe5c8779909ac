use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order exceeds cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("order {0} is not a prime power")]
    NotPrimePower(usize),

    #[error("character table construction failed: {0}")]
    CharTable(String),

    #[error("not abelian-realizable: {0}")]
    NotAbelianRealizable(String),

    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("catalog {path}:{line}: {msg}")]
    Catalog {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
