use ndarray::Array2;

use crate::config::DspConfig;
use crate::error::DspError;
use crate::spectrogram::{BinAxis, Spectrogram};

/// Fraction of a band's bins averaged for the peak and valley statistics.
const QUANTILE: f64 = 0.02;

/// Per-band spectral contrast: dB difference between the peak and valley
/// quantile means inside octave-spaced bands.
///
/// Band 0 covers `[0, contrast_fmin]`; band `k >= 1` covers
/// `[contrast_fmin * 2^(k-1), contrast_fmin * 2^k]`, with the last edge
/// clamped to Nyquist. Output has `n_contrast_bands + 1` rows.
pub fn spectral_contrast(power: &Spectrogram, cfg: &DspConfig) -> Result<Spectrogram, DspError> {
    assert_eq!(
        power.bin_axis,
        BinAxis::LinearHz,
        "spectral_contrast expects a linear-frequency power input"
    );
    let n_bins = power.bins();
    let n_frames = power.frames();
    let bin_hz = cfg.bin_hz();
    let nyquist = cfg.sample_rate as f64 / 2.0;

    let n_bands = cfg.n_contrast_bands + 1;
    let mut edges = Vec::with_capacity(n_bands + 1);
    edges.push(0.0);
    for k in 0..=cfg.n_contrast_bands {
        edges.push((cfg.contrast_fmin * 2.0_f64.powi(k as i32)).min(nyquist));
    }

    // Bin index ranges per band, inclusive start / exclusive end.
    let mut ranges = Vec::with_capacity(n_bands);
    for b in 0..n_bands {
        let start = (edges[b] / bin_hz).ceil() as usize;
        let end = if b == n_bands - 1 {
            n_bins
        } else {
            ((edges[b + 1] / bin_hz).ceil() as usize).min(n_bins)
        };
        if start >= end {
            return Err(DspError::InsufficientFrequencyResolution { band: b });
        }
        ranges.push((start, end));
    }

    let db = |p: f64| 10.0 * p.max(cfg.amplitude_floor).log10();
    let mut data = Array2::<f64>::zeros((n_bands, n_frames));
    let mut band_buf: Vec<f64> = Vec::with_capacity(n_bins);
    for t in 0..n_frames {
        for (b, &(start, end)) in ranges.iter().enumerate() {
            band_buf.clear();
            band_buf.extend(power.data.column(t).iter().skip(start).take(end - start));
            band_buf.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let len = band_buf.len();
            let take = (((QUANTILE * len as f64).round() as usize).max(1)).min(len);
            let valley: f64 = band_buf[..take].iter().sum::<f64>() / take as f64;
            let peak: f64 = band_buf[len - take..].iter().sum::<f64>() / take as f64;
            data[[b, t]] = (db(peak) - db(valley)).max(0.0);
        }
    }

    Ok(Spectrogram {
        data,
        bin_axis: BinAxis::ContrastBand,
        frame_hop: power.frame_hop,
        sample_rate: power.sample_rate,
    })
}
