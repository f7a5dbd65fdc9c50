use thiserror::Error;

#[derive(Debug, Error)]
pub enum FeatureImageError {
    #[error("all-silent clip: every analysis block is below the threshold")]
    AllSilent,
    #[error("feature blocks disagree on frame count: {0:?}")]
    FrameCountMismatch(Vec<(&'static str, usize)>),
    #[error("block heights sum to {got}, expected {expected}")]
    HeightMismatch { got: usize, expected: usize },
    #[error("image needs at least 2 frames, got {0}")]
    TooFewFrames(usize),
    #[error("feature order must list each of the six blocks exactly once")]
    InvalidOrder,
    #[error("label distribution must be non-negative and sum to 1, got sum {0}")]
    InvalidLabel(f64),
    #[error("dsp error: {0}")]
    Dsp(#[from] dsp_core::DspError),
    #[error("malformed feature image file: {0}")]
    MalformedFile(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
