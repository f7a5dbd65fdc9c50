use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("unparseable EmoDB filename: {0}")]
    BadFilename(PathBuf),
    #[error("unknown emotion letter '{letter}' in {file}")]
    UnknownEmotion { letter: char, file: PathBuf },
    #[error("{file}: expected mono 16-bit PCM at 16000 Hz, got {detail}")]
    UnsupportedWav { file: PathBuf, detail: String },
    #[error("wav error on {file}: {source}")]
    Wav {
        file: PathBuf,
        source: hound::Error,
    },
    #[error("split infeasible for class {class}: need {needed}, corpus has {available}")]
    InfeasibleSplit {
        class: &'static str,
        needed: usize,
        available: usize,
    },
    #[error("feature pipeline failed on {clip}: {source}")]
    Pipeline {
        clip: String,
        source: feature_image::FeatureImageError,
    },
    #[error("augmentation failed: {0}")]
    Augment(#[from] augment::AugmentError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
