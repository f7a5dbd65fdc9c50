use ndarray::Array2;

use crate::config::DspConfig;
use crate::spectrogram::{BinAxis, Spectrogram};

/// Mel scale with the linear/log break at 1 kHz.
fn hz_to_mel(hz: f64) -> f64 {
    const F_SP: f64 = 200.0 / 3.0;
    const MIN_LOG_HZ: f64 = 1000.0;
    const MIN_LOG_MEL: f64 = MIN_LOG_HZ / F_SP;
    if hz < MIN_LOG_HZ {
        hz / F_SP
    } else {
        MIN_LOG_MEL + (hz / MIN_LOG_HZ).ln() / (6.4_f64.ln() / 27.0)
    }
}

fn mel_to_hz(mel: f64) -> f64 {
    const F_SP: f64 = 200.0 / 3.0;
    const MIN_LOG_HZ: f64 = 1000.0;
    const MIN_LOG_MEL: f64 = MIN_LOG_HZ / F_SP;
    if mel < MIN_LOG_MEL {
        mel * F_SP
    } else {
        MIN_LOG_HZ * ((mel - MIN_LOG_MEL) * (6.4_f64.ln() / 27.0)).exp()
    }
}

/// Triangular mel filterbank plus a record of degenerate rows.
#[derive(Debug, Clone)]
pub struct MelBank {
    /// `[n_mels x bins]`, all entries >= 0.
    pub weights: Array2<f64>,
    /// Rows that came out all-zero because the FFT resolution is too coarse
    /// for the requested band count. A warning, not an error.
    pub empty_filters: Vec<usize>,
}

/// Build the filterbank for `cfg.n_mels` bands.
pub fn mel_filterbank(cfg: &DspConfig) -> MelBank {
    mel_filterbank_sized(cfg, cfg.n_mels)
}

/// Build a filterbank with an explicit band count; used for the
/// harmonic/percussive block which has its own row budget.
///
/// Each row is a triangle on the linear frequency axis with vertices at
/// consecutive mel-spaced frequencies; no per-filter area normalization.
pub fn mel_filterbank_sized(cfg: &DspConfig, n_mels: usize) -> MelBank {
    let n_bins = cfg.bins();
    let mel_lo = hz_to_mel(cfg.fmin);
    let mel_hi = hz_to_mel(cfg.fmax);
    // n_mels + 2 triangle vertices, uniformly spaced on the mel axis.
    let vertices_hz: Vec<f64> = (0..n_mels + 2)
        .map(|i| mel_to_hz(mel_lo + (mel_hi - mel_lo) * i as f64 / (n_mels + 1) as f64))
        .collect();

    let bin_hz = cfg.bin_hz();
    let mut weights = Array2::<f64>::zeros((n_mels, n_bins));
    for m in 0..n_mels {
        let (left, center, right) = (vertices_hz[m], vertices_hz[m + 1], vertices_hz[m + 2]);
        for k in 0..n_bins {
            let f = k as f64 * bin_hz;
            let rising = (f - left) / (center - left);
            let falling = (right - f) / (right - center);
            let w = rising.min(falling).max(0.0);
            weights[[m, k]] = w;
        }
    }

    let empty_filters = (0..n_mels)
        .filter(|&m| weights.row(m).iter().all(|&w| w == 0.0))
        .collect();

    MelBank {
        weights,
        empty_filters,
    }
}

/// Apply the filterbank to a linear-frequency power spectrogram.
pub fn mel_spectrogram(power: &Spectrogram, bank: &MelBank) -> Spectrogram {
    assert_eq!(
        power.bin_axis,
        BinAxis::LinearHz,
        "mel_spectrogram expects a linear-frequency power input"
    );
    assert_eq!(power.bins(), bank.weights.ncols(), "bin count mismatch");
    Spectrogram {
        data: bank.weights.dot(&power.data),
        bin_axis: BinAxis::Mel,
        frame_hop: power.frame_hop,
        sample_rate: power.sample_rate,
    }
}
