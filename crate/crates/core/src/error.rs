use thiserror::Error;

/// Errors produced by braid computations and by the text layer.
#[derive(Debug, Error)]
pub enum BraidError {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("not a permutation of 1..{n}: {images:?}")]
    NotABijection { n: usize, images: Vec<usize> },

    #[error("pair set is not the inversion set of any permutation")]
    InvalidInversionSet,

    #[error("inversion set does not belong to the given permutation")]
    PermutationMismatch,

    #[error("strand count must be at least {min}, got {n}")]
    TooFewStrands { n: usize, min: usize },

    #[error("strand count {n} exceeds the limit {max} for this operation")]
    TooManyStrands { n: usize, max: usize },

    #[error("inverse generator in a positive word (token {index})")]
    InverseToken { index: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;

pub(crate) fn same_n(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(BraidError::StrandMismatch { left, right })
    }
}
