use crate::error::DspError;

/// Analysis parameters shared by all feature extractors.
///
/// Defaults are the common speech-analysis settings for 16 kHz audio. The
/// per-feature bin counts are chosen so that the six stacked blocks come out
/// at 40 + 128 + 12 + 7 + 6 + 37 = 230 rows; every count stays overridable.
#[derive(Debug, Clone, PartialEq)]
pub struct DspConfig {
    pub sample_rate: u32,
    /// STFT frame length in samples.
    pub frame_length: usize,
    /// Hop between consecutive frames in samples.
    pub hop: usize,
    /// Mel bands for the mel spectrogram block.
    pub n_mels: usize,
    /// Cepstral coefficients kept from the mel spectrum.
    pub n_mfcc: usize,
    /// Pitch classes in the chromagram (12 = semitones).
    pub n_chroma: usize,
    /// Octave bands for spectral contrast (output has one extra row).
    pub n_contrast_bands: usize,
    /// Mel bands for the harmonic/percussive averaged block.
    pub n_hp_mels: usize,
    /// Lower frequency bound for the mel filterbank, Hz.
    pub fmin: f64,
    /// Upper frequency bound for the mel filterbank, Hz.
    pub fmax: f64,
    /// First octave-band edge for spectral contrast, Hz. Kept separate from
    /// `fmin` because octave bands starting at 0 Hz would be empty.
    pub contrast_fmin: f64,
    /// Smallest power value that enters a logarithm.
    pub amplitude_floor: f64,
    /// dB range kept below the per-spectrogram maximum; `None` disables
    /// clamping.
    pub top_db: Option<f64>,
    /// Median-filter kernel length for HPSS, in frames (time direction) and
    /// bins (frequency direction).
    pub hpss_kernel: usize,
    /// Center frames by reflect-padding half a frame on each side.
    pub center: bool,
}

impl Default for DspConfig {
    fn default() -> Self {
        Self {
            sample_rate: 16_000,
            frame_length: 2048,
            hop: 512,
            n_mels: 128,
            n_mfcc: 40,
            n_chroma: 12,
            n_contrast_bands: 6,
            n_hp_mels: 37,
            fmin: 0.0,
            fmax: 8_000.0,
            contrast_fmin: 200.0,
            amplitude_floor: 1e-10,
            top_db: Some(80.0),
            hpss_kernel: 31,
            center: true,
        }
    }
}

impl DspConfig {
    pub fn validate(&self) -> Result<(), DspError> {
        if self.hop == 0 || self.hop > self.frame_length {
            return Err(DspError::InvalidConfig(format!(
                "hop ({}) must be in 1..=frame_length ({})",
                self.hop, self.frame_length
            )));
        }
        if self.n_mfcc > self.n_mels {
            return Err(DspError::InvalidConfig(format!(
                "n_mfcc ({}) must not exceed n_mels ({})",
                self.n_mfcc, self.n_mels
            )));
        }
        if self.fmax > self.sample_rate as f64 / 2.0 {
            return Err(DspError::InvalidConfig(format!(
                "fmax ({}) above Nyquist ({})",
                self.fmax,
                self.sample_rate as f64 / 2.0
            )));
        }
        if self.fmin >= self.fmax {
            return Err(DspError::InvalidConfig(format!(
                "fmin ({}) must be below fmax ({})",
                self.fmin, self.fmax
            )));
        }
        if self.amplitude_floor <= 0.0 {
            return Err(DspError::InvalidConfig(
                "amplitude_floor must be positive".into(),
            ));
        }
        if self.hpss_kernel == 0 || self.hpss_kernel % 2 == 0 {
            return Err(DspError::InvalidConfig(format!(
                "hpss_kernel ({}) must be odd and positive",
                self.hpss_kernel
            )));
        }
        Ok(())
    }

    /// Number of one-sided FFT bins: `frame_length / 2 + 1`.
    pub fn bins(&self) -> usize {
        self.frame_length / 2 + 1
    }

    /// Width of one FFT bin in Hz.
    pub fn bin_hz(&self) -> f64 {
        self.sample_rate as f64 / self.frame_length as f64
    }
}
