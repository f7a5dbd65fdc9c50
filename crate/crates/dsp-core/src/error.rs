use thiserror::Error;

#[derive(Debug, Error)]
pub enum DspError {
    #[error("signal too short: need at least {needed} samples, got {got}")]
    SignalTooShort { needed: usize, got: usize },
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("n_mfcc ({n_mfcc}) must not exceed the number of mel bands ({n_mels})")]
    TooManyCoefficients { n_mfcc: usize, n_mels: usize },
    #[error("insufficient frequency resolution: contrast band {band} contains no FFT bins")]
    InsufficientFrequencyResolution { band: usize },
}
