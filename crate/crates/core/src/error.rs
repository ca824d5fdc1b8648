use thiserror::Error;

/// Errors raised by the library. Audit disagreements are never errors;
/// they are reported as data.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("negative entry {value} at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize, value: String },

    #[error("group order exceeds cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("tensor budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: usize, budget: usize },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("element is not in the group")]
    NotInGroup,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unknown group name `{0}`")]
    UnknownGroup(String),

    #[error("no suitable prime found below {0}")]
    NoSuitablePrime(u64),

    #[error("eigenspace separation failed for prime {0}")]
    SeparationFailure(u64),

    #[error("value is not a rational integer: {0}")]
    NonIntegral(String),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("axiom `{axiom}` fails at basis tuple {witness:?}")]
    Axiom { axiom: String, witness: Vec<usize> },

    #[error("antipode is not invertible")]
    SingularAntipode,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
