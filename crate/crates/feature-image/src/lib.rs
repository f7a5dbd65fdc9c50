//! Silence trimming, per-block normalization, and assembly of the six
//! frequency-domain feature blocks into a 3-channel, height-230,
//! variable-width image.
//!
//! Channel 0 holds the vertically stacked, per-block min-max-normalized
//! features; channels 1 and 2 hold the first and second temporal differences
//! of channel 0.

mod compose;
mod error;
mod extract;
mod io;
mod label;
mod order;
mod trim;

pub use compose::{compose, FeatureImage, IMAGE_HEIGHT};
pub use error::FeatureImageError;
pub use extract::{FeatureBlocks, FeatureExtractor};
pub use io::{load_image, save_image};
pub use label::LabelDistribution;
pub use order::{FeatureBlock, FeatureOrder};
pub use trim::{trim_silence, TRIM_BLOCK};
