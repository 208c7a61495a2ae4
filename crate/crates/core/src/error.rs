use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("rank must be at least 1")]
    InvalidRank,

    #[error("class of length {found} in a rank {expected} datum")]
    BadLength { expected: usize, found: usize },

    #[error("the zero class is missing from the datum")]
    MissingZero,

    #[error("classes span a subspace of dimension {span} < rank {rank}")]
    NotGenerating { rank: usize, span: usize },

    #[error("letter {index} is not a root of the datum")]
    NotARoot { index: usize },

    #[error("the datum is 2-independent; no kernel witness exists")]
    IsIndependent,

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("step budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("rank {rank} exceeds the enumeration limit {limit}")]
    RankTooLarge { rank: usize, limit: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
