use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation {w} is not in S_{n}")]
    NotInSymmetricGroup { w: String, n: usize },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("sequence {seq:?} is not compatible with {w}: descent {descent} is missing")]
    Incompatible { seq: Vec<u32>, w: String, descent: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
