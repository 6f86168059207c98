use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0} is not a usable prime modulus")]
    InvalidPrime(u64),
    #[error("ramification index must be ≥ 2 (got {0})")]
    Weight(i64),
    #[error("block sizes must be positive and nonempty: {0}")]
    Blocks(String),
    #[error("index {index} out of range {lo}..={hi}")]
    Index { index: usize, lo: usize, hi: usize },
    #[error("truncation level {got} too small (need at least {need})")]
    Truncation { got: usize, need: usize },
    #[error("invalid ramification data: {0}")]
    Spec(String),
    #[error("invalid parameters: {0}")]
    Lambda(String),
    #[error("degree bound exceeded: phi = {phi}, bound = {bound}")]
    Bound { phi: i64, bound: i64 },
    #[error("genus {0} base curve: the Grothendieck group is not finitely generated")]
    Genus(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
