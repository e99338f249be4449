use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found} ({context})")]
    Dimension {
        expected: usize,
        found: usize,
        context: &'static str,
    },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("duplicate point at positions {first} and {second}")]
    DuplicatePoint { first: usize, second: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("points are affinely dependent and do not span a simplex")]
    AffinelyDependent,

    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("negative scaling factor {0}")]
    NegativeScale(String),

    #[error("no generic lifting found after {attempts} attempts (last seed {last_seed})")]
    NonGenericLifting { attempts: usize, last_seed: u64 },

    #[error("unknown engine `{name}` (available: {available})")]
    UnknownEngine { name: String, available: String },

    #[error("invalid rational `{0}`")]
    ParseRational(String),
}
