use ndarray::Array2;

use crate::spectrogram::{BinAxis, Spectrogram};

/// Angular step per pitch class on each of the three tonal circles
/// (fifths, minor thirds, major thirds), in units of pi.
const CIRCLE_STEPS: [f64; 3] = [7.0 / 6.0, 3.0 / 2.0, 2.0 / 3.0];
/// Radius of each circle; the major-third circle is half-size.
const CIRCLE_RADII: [f64; 3] = [1.0, 1.0, 0.5];

/// Fixed 6x12 sinusoidal projection of a pitch-class vector onto the three
/// tonal circles: rows are (sin, cos) pairs for fifths, minor thirds and
/// major thirds.
fn transform_matrix() -> Array2<f64> {
    let mut m = Array2::<f64>::zeros((6, 12));
    for (circle, (&step, &radius)) in CIRCLE_STEPS.iter().zip(CIRCLE_RADII.iter()).enumerate() {
        for class in 0..12 {
            let angle = std::f64::consts::PI * step * class as f64;
            m[[2 * circle, class]] = radius * angle.sin();
            m[[2 * circle + 1, class]] = radius * angle.cos();
        }
    }
    m
}

/// 6-dimensional tonal centroid per frame: the fixed sinusoidal transform of
/// the L1-normalized chroma column. Silent frames stay zero.
pub fn tonnetz(chroma: &Spectrogram) -> Spectrogram {
    assert_eq!(chroma.bin_axis, BinAxis::Chroma, "tonnetz expects chroma input");
    assert_eq!(chroma.bins(), 12, "tonnetz expects 12 pitch-class rows");

    let mut normalized = chroma.data.clone();
    for mut col in normalized.columns_mut() {
        let norm: f64 = col.iter().map(|v| v.abs()).sum();
        if norm > 0.0 {
            col.mapv_inplace(|v| v / norm);
        }
    }

    Spectrogram {
        data: transform_matrix().dot(&normalized),
        bin_axis: BinAxis::TonnetzDim,
        frame_hop: chroma.frame_hop,
        sample_rate: chroma.sample_rate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array2;

    fn chroma_spec(data: Array2<f64>) -> Spectrogram {
        Spectrogram {
            data,
            bin_axis: BinAxis::Chroma,
            frame_hop: 512,
            sample_rate: 16_000,
        }
    }

    #[test]
    fn uniform_chroma_maps_to_zero() {
        let spec = chroma_spec(Array2::ones((12, 3)));
        let out = tonnetz(&spec);
        assert_eq!(out.data.shape(), &[6, 3]);
        assert!(out.data.iter().all(|&v| v.abs() < 1e-12));
    }

    #[test]
    fn one_hot_chroma_selects_a_matrix_column() {
        let m = transform_matrix();
        for class in 0..12 {
            let mut data = Array2::zeros((12, 1));
            data[[class, 0]] = 0.7; // L1 normalization makes the scale irrelevant
            let out = tonnetz(&chroma_spec(data));
            for dim in 0..6 {
                assert!((out.data[[dim, 0]] - m[[dim, class]]).abs() < 1e-12);
                assert!(out.data[[dim, 0]].abs() <= 1.0);
            }
        }
    }

    #[test]
    fn silent_frame_stays_zero() {
        let out = tonnetz(&chroma_spec(Array2::zeros((12, 2))));
        assert!(out.data.iter().all(|&v| v == 0.0));
    }
}
