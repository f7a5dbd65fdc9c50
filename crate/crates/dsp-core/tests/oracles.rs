//! Independent oracles for the numerical kernels: direct DFT/DCT sums and
//! hand-computed statistics, kept free of the library's own FFT path.

use dsp_core::{
    chromagram, hann_window, hpss, mel_filterbank, mel_spectrogram, mfcc, power_to_db,
    spectral_contrast, stft, tonnetz, BinAxis, DspConfig, Spectrogram,
};
use ndarray::Array2;

fn sine(freq: f64, sr: u32, secs: f64) -> Vec<f64> {
    let n = (secs * sr as f64) as usize;
    (0..n)
        .map(|i| (2.0 * std::f64::consts::PI * freq * i as f64 / sr as f64).sin())
        .collect()
}

/// O(n^2) DFT power of one windowed frame.
fn direct_frame_power(frame: &[f64], n_bins: usize) -> Vec<f64> {
    let n = frame.len();
    let window = hann_window(n);
    (0..n_bins)
        .map(|k| {
            let (mut re, mut im) = (0.0, 0.0);
            for (i, &x) in frame.iter().enumerate() {
                let angle = -2.0 * std::f64::consts::PI * k as f64 * i as f64 / n as f64;
                let w = x * window[i];
                re += w * angle.cos();
                im += w * angle.sin();
            }
            re * re + im * im
        })
        .collect()
}

#[test]
fn stft_interior_frame_matches_direct_dft() {
    let cfg = DspConfig {
        center: false,
        ..DspConfig::default()
    };
    let signal = sine(440.0, 16_000, 0.5);
    let spec = stft(&signal, &cfg).unwrap();

    // Frame 3 starts at 3 * hop with no padding involved.
    let start = 3 * cfg.hop;
    let expected = direct_frame_power(&signal[start..start + cfg.frame_length], cfg.bins());
    for (k, &e) in expected.iter().enumerate() {
        let got = spec.data[[k, 3]];
        assert!(
            (got - e).abs() <= 1e-6 * e.abs().max(1.0),
            "bin {k}: {got} vs {e}"
        );
    }

    let argmax = expected
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .unwrap()
        .0;
    assert_eq!(argmax, 56, "oracle confirms the 440 Hz peak bin");
}

#[test]
fn stft_windowed_impulse_matches_direct_dft() {
    let cfg = DspConfig {
        center: false,
        ..DspConfig::default()
    };
    let mut signal = vec![0.0; cfg.frame_length];
    signal[0] = 1.0;
    let spec = stft(&signal, &cfg).unwrap();
    assert_eq!(spec.frames(), 1);

    let expected = direct_frame_power(&signal, cfg.bins());
    let total_expected: f64 = expected.iter().sum();
    let total_got: f64 = spec.data.column(0).iter().sum();
    assert!((total_got - total_expected).abs() <= 1e-9 * total_expected.max(1.0));
    for (k, &e) in expected.iter().enumerate() {
        assert!((spec.data[[k, 0]] - e).abs() <= 1e-9, "bin {k}");
    }
    // A Hann window zeroes its first sample, so the whole frame vanishes.
    let w0 = hann_window(cfg.frame_length)[0];
    assert_eq!(w0, 0.0);
    assert!(total_got.abs() < 1e-18);
}

#[test]
fn mfcc_matches_brute_force_dct() {
    let n = 128;
    // Deterministic pseudo-random column.
    let column: Vec<f64> = (0..n)
        .map(|i| (((i * 2654435761_usize) % 1000) as f64) / 500.0 - 1.0)
        .collect();
    let mut data = Array2::zeros((n, 1));
    for (i, &v) in column.iter().enumerate() {
        data[[i, 0]] = v;
    }
    let spec = Spectrogram {
        data,
        bin_axis: BinAxis::Mel,
        frame_hop: 512,
        sample_rate: 16_000,
    };
    let out = mfcc(&spec, n).unwrap();

    for k in 0..n {
        let a = if k == 0 {
            (1.0 / n as f64).sqrt()
        } else {
            (2.0 / n as f64).sqrt()
        };
        let direct: f64 = column
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                x * (std::f64::consts::PI * (2 * i + 1) as f64 * k as f64 / (2 * n) as f64).cos()
            })
            .sum::<f64>()
            * a;
        let got = out.data[[k, 0]];
        assert!(
            (got - direct).abs() <= 1e-9 * direct.abs().max(1.0),
            "coefficient {k}: {got} vs {direct}"
        );
    }
}

#[test]
fn tonnetz_matches_brute_force_matvec() {
    // The same fixed transform, written out longhand.
    let steps = [7.0 / 6.0, 7.0 / 6.0, 3.0 / 2.0, 3.0 / 2.0, 2.0 / 3.0, 2.0 / 3.0];
    let radii = [1.0, 1.0, 1.0, 1.0, 0.5, 0.5];
    let chroma_col: Vec<f64> = (0..12).map(|i| ((i * 7 + 3) % 11) as f64 / 11.0).collect();
    let l1: f64 = chroma_col.iter().sum();

    let mut data = Array2::zeros((12, 1));
    for (i, &v) in chroma_col.iter().enumerate() {
        data[[i, 0]] = v;
    }
    let out = tonnetz(&Spectrogram {
        data,
        bin_axis: BinAxis::Chroma,
        frame_hop: 512,
        sample_rate: 16_000,
    });

    for dim in 0..6 {
        let direct: f64 = chroma_col
            .iter()
            .enumerate()
            .map(|(class, &v)| {
                let angle = std::f64::consts::PI * steps[dim] * class as f64;
                let basis = if dim % 2 == 0 { angle.sin() } else { angle.cos() };
                radii[dim] * basis * v / l1
            })
            .sum();
        assert!(
            (out.data[[dim, 0]] - direct).abs() < 1e-12,
            "dim {dim}: {} vs {direct}",
            out.data[[dim, 0]]
        );
    }
}

#[test]
fn contrast_separates_tone_from_noise() {
    let cfg = DspConfig::default();
    let bins = cfg.bins();

    // Synthetic single-frame spectra: flat noise floor vs. noise + strong peak
    // inside band 3 (800..1600 Hz).
    let noise = Array2::from_elem((bins, 1), 1e-4);
    let mut tone = noise.clone();
    let peak_bin = (1100.0 / cfg.bin_hz()).round() as usize;
    tone[[peak_bin, 0]] = 1.0;

    let spec = |data| Spectrogram {
        data,
        bin_axis: BinAxis::LinearHz,
        frame_hop: cfg.hop,
        sample_rate: cfg.sample_rate,
    };
    let c_noise = spectral_contrast(&spec(noise), &cfg).unwrap();
    let c_tone = spectral_contrast(&spec(tone.clone()), &cfg).unwrap();

    // Direct quantile oracle for the tone's band: 2% of the band rounds to
    // at least one bin, so valley = floor level and peak mean includes 1.0.
    let band3 = (
        (800.0 / cfg.bin_hz()).ceil() as usize,
        (1600.0 / cfg.bin_hz()).ceil() as usize,
    );
    let mut band: Vec<f64> = (band3.0..band3.1).map(|k| tone[[k, 0]]).collect();
    band.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let take = ((0.02 * band.len() as f64).round() as usize).max(1);
    let valley: f64 = band[..take].iter().sum::<f64>() / take as f64;
    let peak: f64 = band[band.len() - take..].iter().sum::<f64>() / take as f64;
    let expected = 10.0 * (peak / valley).log10();

    assert!(
        (c_tone.data[[3, 0]] - expected).abs() < 1e-9,
        "band 3 contrast {} vs oracle {expected}",
        c_tone.data[[3, 0]]
    );
    assert!(c_tone.data[[3, 0]] > c_noise.data[[3, 0]] + 10.0);
    assert_eq!(c_noise.data[[3, 0]], 0.0);
}

#[test]
fn hpss_assigns_tone_energy_to_harmonic() {
    let cfg = DspConfig::default();
    let spec = stft(&sine(440.0, 16_000, 1.0), &cfg).unwrap();
    let (h, p) = hpss(&spec, &cfg);
    let (eh, ep) = (h.data.sum(), p.data.sum());
    assert!(
        eh / (eh + ep) >= 0.8,
        "harmonic fraction {}",
        eh / (eh + ep)
    );
}

#[test]
fn hpss_assigns_click_energy_to_percussive() {
    let cfg = DspConfig::default();
    // One-sample impulses at 10 Hz.
    let mut signal = vec![0.0; 16_000];
    let mut i = 0;
    while i < signal.len() {
        signal[i] = 1.0;
        i += 1_600;
    }
    let spec = stft(&signal, &cfg).unwrap();
    let (h, p) = hpss(&spec, &cfg);
    let (eh, ep) = (h.data.sum(), p.data.sum());
    assert!(
        ep / (eh + ep) >= 0.8,
        "percussive fraction {}",
        ep / (eh + ep)
    );
}

#[test]
fn hpss_additivity_on_speech_like_signal() {
    let cfg = DspConfig::default();
    // Tone bursts plus clicks, the mixed case.
    let mut signal = sine(220.0, 16_000, 1.0);
    for (i, s) in signal.iter_mut().enumerate() {
        if i % 1_600 == 0 {
            *s += 0.8;
        }
        if (i / 4_000) % 2 == 0 {
            *s *= 0.2;
        }
    }
    let spec = stft(&signal, &cfg).unwrap();
    let (h, p) = hpss(&spec, &cfg);
    for ((&hv, &pv), &xv) in h.data.iter().zip(p.data.iter()).zip(spec.data.iter()) {
        assert!((hv + pv - xv).abs() <= 1e-6 * xv.abs().max(1e-12));
    }
}

#[test]
fn all_extractors_share_the_frame_count() {
    let cfg = DspConfig::default();
    let signal = sine(330.0, 16_000, 0.7);
    let power = stft(&signal, &cfg).unwrap();
    let frames = power.frames();

    let bank = mel_filterbank(&cfg);
    let mel = mel_spectrogram(&power, &bank);
    let mel_db = power_to_db(&mel, 1.0, cfg.amplitude_floor, cfg.top_db);
    let cepstra = mfcc(&mel_db, cfg.n_mfcc).unwrap();
    let chroma = chromagram(&power);
    let contrast = spectral_contrast(&power, &cfg).unwrap();
    let centroids = tonnetz(&chroma);
    let (h, p) = hpss(&power, &cfg);

    for (name, spec) in [
        ("mel", &mel),
        ("mfcc", &cepstra),
        ("chroma", &chroma),
        ("contrast", &contrast),
        ("tonnetz", &centroids),
        ("harmonic", &h),
        ("percussive", &p),
    ] {
        assert_eq!(spec.frames(), frames, "{name}");
        assert!(spec.is_finite(), "{name}");
    }
}

#[test]
fn kernels_are_deterministic() {
    let cfg = DspConfig::default();
    let signal = sine(523.25, 16_000, 0.5);
    let a = stft(&signal, &cfg).unwrap();
    let b = stft(&signal, &cfg).unwrap();
    assert_eq!(a.data, b.data);

    let bank = mel_filterbank(&cfg);
    let mel_a = power_to_db(&mel_spectrogram(&a, &bank), 1.0, 1e-10, Some(80.0));
    let mel_b = power_to_db(&mel_spectrogram(&b, &bank), 1.0, 1e-10, Some(80.0));
    assert_eq!(mel_a.data, mel_b.data);

    let (h1, p1) = hpss(&a, &cfg);
    let (h2, p2) = hpss(&b, &cfg);
    assert_eq!(h1.data, h2.data);
    assert_eq!(p1.data, p2.data);
}
