//! Deterministic numerical kernels that turn a mono sample buffer into the
//! frequency-domain feature blocks used for speech feature images.
//!
//! Every function here is a pure function over immutable inputs: identical
//! inputs and config produce bit-identical outputs, and nothing touches a
//! global RNG, so all kernels are safe to call from many threads at once.

mod chroma;
mod config;
mod contrast;
mod db;
mod error;
mod hpss;
mod mel;
mod mfcc;
mod spectrogram;
mod stft;
mod tonnetz;
mod window;

pub use chroma::chromagram;
pub use config::DspConfig;
pub use contrast::spectral_contrast;
pub use db::power_to_db;
pub use error::DspError;
pub use hpss::hpss;
pub use mel::{mel_filterbank, mel_filterbank_sized, mel_spectrogram, MelBank};
pub use mfcc::mfcc;
pub use spectrogram::{BinAxis, Spectrogram};
pub use stft::stft;
pub use tonnetz::tonnetz;
pub use window::hann_window;
