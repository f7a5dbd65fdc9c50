use thiserror::Error;

#[derive(Debug, Error)]
pub enum AugmentError {
    #[error("image shapes differ: {a:?} vs {b:?}")]
    ShapeMismatch {
        a: (usize, usize, usize),
        b: (usize, usize, usize),
    },
    #[error("invalid cutmix params: {0}")]
    InvalidParams(String),
}
