use ndarray::Array2;

use crate::spectrogram::{BinAxis, Spectrogram};

/// Gaussian spread (in semitones) of one FFT bin's energy across neighboring
/// pitch classes.
const PITCH_SIGMA: f64 = 1.0;

/// 12-row chromagram: every FFT bin's power is folded onto the pitch-class
/// circle (C = row 0) with a Gaussian profile around its fractional pitch,
/// then each frame is max-normalized to 1 when it carries energy.
pub fn chromagram(power: &Spectrogram) -> Spectrogram {
    assert_eq!(
        power.bin_axis,
        BinAxis::LinearHz,
        "chromagram expects a linear-frequency power input"
    );
    let n_bins = power.bins();
    let n_frames = power.frames();
    let frame_length = (n_bins - 1) * 2;
    let bin_hz = power.sample_rate as f64 / frame_length as f64;

    // Per-bin weights onto the 12 classes; bin 0 (DC) has no pitch.
    let mut bin_weights = Array2::<f64>::zeros((12, n_bins));
    for k in 1..n_bins {
        let freq = k as f64 * bin_hz;
        // MIDI note number; A4 = 440 Hz = 69, so C maps to class 0.
        let midi = 69.0 + 12.0 * (freq / 440.0).log2();
        for class in 0..12 {
            let mut d = (midi - class as f64).rem_euclid(12.0);
            if d > 6.0 {
                d -= 12.0;
            }
            bin_weights[[class, k]] = (-0.5 * (d / PITCH_SIGMA).powi(2)).exp();
        }
    }

    let mut data = bin_weights.dot(&power.data);
    for t in 0..n_frames {
        let mut col = data.column_mut(t);
        let max = col.iter().copied().fold(0.0_f64, f64::max);
        if max > 0.0 {
            col.mapv_inplace(|v| v / max);
        }
    }

    Spectrogram {
        data,
        bin_axis: BinAxis::Chroma,
        frame_hop: power.frame_hop,
        sample_rate: power.sample_rate,
    }
}
