use ndarray::{Array2, Axis};

use crate::config::DspConfig;
use crate::spectrogram::Spectrogram;

/// Split a power spectrogram into harmonic and percussive parts.
///
/// Median filtering along time enhances sustained (harmonic) energy, along
/// frequency enhances broadband transient (percussive) energy. The two
/// enhanced spectrograms are turned into soft power-2 masks, so
/// `harmonic + percussive` reconstructs the input elementwise.
pub fn hpss(power: &Spectrogram, cfg: &DspConfig) -> (Spectrogram, Spectrogram) {
    let kernel = cfg.hpss_kernel;
    let harmonic_enhanced = median_filter_axis(&power.data, Axis(1), kernel);
    let percussive_enhanced = median_filter_axis(&power.data, Axis(0), kernel);

    let mut harmonic = power.data.clone();
    let mut percussive = power.data.clone();
    for ((h, p), (&he, (&pe, &x))) in harmonic
        .iter_mut()
        .zip(percussive.iter_mut())
        .zip(harmonic_enhanced.iter().zip(percussive_enhanced.iter().zip(power.data.iter())))
    {
        let (h2, p2) = (he * he, pe * pe);
        let total = h2 + p2;
        let mask_h = if total > 0.0 { h2 / total } else { 0.5 };
        *h = x * mask_h;
        *p = x * (1.0 - mask_h);
    }

    let make = |data: Array2<f64>| Spectrogram {
        data,
        bin_axis: power.bin_axis,
        frame_hop: power.frame_hop,
        sample_rate: power.sample_rate,
    };
    (make(harmonic), make(percussive))
}

/// Median filter each lane along `axis` with reflect boundary handling
/// (`d c b a | a b c d | d c b a`).
fn median_filter_axis(data: &Array2<f64>, axis: Axis, kernel: usize) -> Array2<f64> {
    assert!(kernel % 2 == 1, "kernel must be odd");
    let mut out = data.clone();
    let half = kernel as isize / 2;
    let mut window = vec![0.0; kernel];
    for (lane, mut out_lane) in data.lanes(axis).into_iter().zip(out.lanes_mut(axis)) {
        let n = lane.len() as isize;
        for i in 0..n {
            for (w, offset) in window.iter_mut().zip(-half..=half) {
                *w = lane[reflect_index(i + offset, n)];
            }
            window.sort_by(|a, b| a.partial_cmp(b).unwrap());
            out_lane[i as usize] = window[kernel / 2];
        }
    }
    out
}

/// Map an out-of-range index back inside `[0, n)` by mirroring at the
/// boundaries, repeating the edge samples.
fn reflect_index(mut i: isize, n: isize) -> usize {
    let period = 2 * n;
    i = i.rem_euclid(period);
    if i >= n {
        i = period - 1 - i;
    }
    i as usize
}
