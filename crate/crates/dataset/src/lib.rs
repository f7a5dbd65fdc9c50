//! Berlin EmoDB ingestion, stratified train/test splitting, and mini-batch
//! assembly with per-batch maximum-length signal padding.

mod batch;
mod emodb;
mod error;
mod split;

pub use batch::{BatchPipeline, Batcher, BatchingMode, LabeledBatch};
pub use emodb::{load_emodb, parse_emodb_filename, write_wav, AudioClip, EmotionLabel, N_CLASSES};
pub use error::DatasetError;
pub use split::{split, ClassTargets, DatasetSplit, SplitMode, TABLE_1_TARGETS};
