use ndarray::Array2;

/// What the row axis of a [`Spectrogram`] means.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinAxis {
    /// Linearly spaced FFT bins in Hz.
    LinearHz,
    /// Mel-scaled bands.
    Mel,
    /// Pitch classes C..B.
    Chroma,
    /// Octave-spaced contrast bands.
    ContrastBand,
    /// Tonal centroid dimensions.
    TonnetzDim,
    /// Cepstral coefficients.
    Cepstral,
}

/// A real matrix of per-frame feature rows plus the metadata needed to
/// interpret it.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrogram {
    /// `[bins x frames]`, power or dB depending on the producing operation.
    pub data: Array2<f64>,
    pub bin_axis: BinAxis,
    /// Hop between frames, in samples.
    pub frame_hop: usize,
    pub sample_rate: u32,
}

impl Spectrogram {
    pub fn bins(&self) -> usize {
        self.data.nrows()
    }

    pub fn frames(&self) -> usize {
        self.data.ncols()
    }

    /// True when every entry is finite (no NaN/Inf).
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}
