//! Signal-level augmentation of raw clips and CutMix augmentation of feature
//! images, with proportional label mixing.
//!
//! All randomness flows through caller-supplied generators: a fixed seed
//! reproduces augmented outputs bit-exactly regardless of where the calls
//! run.

mod cutmix;
mod error;
mod signal;

pub use cutmix::{cutmix, cutmix_batch, CutMixParams};
pub use error::AugmentError;
pub use signal::{augment_signal, SignalAugConfig};
