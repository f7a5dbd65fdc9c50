use ndarray::Array2;

use crate::error::DspError;
use crate::spectrogram::{BinAxis, Spectrogram};

/// Orthonormal DCT-II matrix `[n_out x n]`:
/// `A[k][i] = a(k) cos(pi (2i + 1) k / (2n))` with `a(0) = sqrt(1/n)`,
/// `a(k>0) = sqrt(2/n)`, so that `A A^T = I` when `n_out == n`.
fn dct_ii_matrix(n_out: usize, n: usize) -> Array2<f64> {
    let mut m = Array2::<f64>::zeros((n_out, n));
    let norm0 = (1.0 / n as f64).sqrt();
    let norm = (2.0 / n as f64).sqrt();
    for k in 0..n_out {
        let a = if k == 0 { norm0 } else { norm };
        for i in 0..n {
            let angle = std::f64::consts::PI * (2 * i + 1) as f64 * k as f64 / (2 * n) as f64;
            m[[k, i]] = a * angle.cos();
        }
    }
    m
}

/// Mel-frequency cepstral coefficients: per-frame orthonormal DCT-II of the
/// log-mel column, truncated to `n_mfcc` rows.
pub fn mfcc(mel_db: &Spectrogram, n_mfcc: usize) -> Result<Spectrogram, DspError> {
    let n_mels = mel_db.bins();
    if n_mfcc > n_mels {
        return Err(DspError::TooManyCoefficients { n_mfcc, n_mels });
    }
    let dct = dct_ii_matrix(n_mfcc, n_mels);
    Ok(Spectrogram {
        data: dct.dot(&mel_db.data),
        bin_axis: BinAxis::Cepstral,
        frame_hop: mel_db.frame_hop,
        sample_rate: mel_db.sample_rate,
    })
}
