use ndarray::Array2;
use rustfft::{num_complex::Complex, FftPlanner};

use crate::config::DspConfig;
use crate::error::DspError;
use crate::spectrogram::{BinAxis, Spectrogram};
use crate::window::hann_window;

/// Power spectrogram of a mono signal: Hann-windowed frames, one-sided FFT,
/// squared magnitudes.
///
/// With `cfg.center` the signal is reflect-padded by half a frame on each
/// side and the frame count is `1 + floor(len / hop)`; without centering the
/// frames start at sample 0 and the count is
/// `1 + floor((len - frame_length) / hop)`.
pub fn stft(samples: &[f64], cfg: &DspConfig) -> Result<Spectrogram, DspError> {
    cfg.validate()?;
    if samples.len() < cfg.frame_length {
        return Err(DspError::SignalTooShort {
            needed: cfg.frame_length,
            got: samples.len(),
        });
    }

    let frame_len = cfg.frame_length;
    let padded;
    let signal: &[f64] = if cfg.center {
        padded = reflect_pad(samples, frame_len / 2);
        &padded
    } else {
        samples
    };

    let n_frames = 1 + (signal.len() - frame_len) / cfg.hop;
    let n_bins = cfg.bins();
    let window = hann_window(frame_len);

    let mut planner = FftPlanner::<f64>::new();
    let fft = planner.plan_fft_forward(frame_len);
    let mut buf = vec![Complex::new(0.0, 0.0); frame_len];
    let mut scratch = vec![Complex::new(0.0, 0.0); fft.get_inplace_scratch_len()];

    let mut data = Array2::<f64>::zeros((n_bins, n_frames));
    for t in 0..n_frames {
        let start = t * cfg.hop;
        for (i, slot) in buf.iter_mut().enumerate() {
            *slot = Complex::new(signal[start + i] * window[i], 0.0);
        }
        fft.process_with_scratch(&mut buf, &mut scratch);
        for k in 0..n_bins {
            data[[k, t]] = buf[k].norm_sqr();
        }
    }

    Ok(Spectrogram {
        data,
        bin_axis: BinAxis::LinearHz,
        frame_hop: cfg.hop,
        sample_rate: cfg.sample_rate,
    })
}

/// Mirror the signal about its endpoints without repeating them:
/// `[c b | a b c d | c b]` for pad 2.
fn reflect_pad(samples: &[f64], pad: usize) -> Vec<f64> {
    let n = samples.len();
    debug_assert!(n > pad, "reflect padding needs len > pad");
    let mut out = Vec::with_capacity(n + 2 * pad);
    for i in (1..=pad).rev() {
        out.push(samples[i]);
    }
    out.extend_from_slice(samples);
    for i in 2..pad + 2 {
        out.push(samples[n - i]);
    }
    out
}
