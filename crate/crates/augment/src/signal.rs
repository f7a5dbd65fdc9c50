use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::error::AugmentError;

/// Ranges for the four signal-level transforms; `None` disables a transform
/// entirely so each one can be ablated on its own.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalAugConfig {
    /// Additive white noise, target SNR in dB.
    pub noise_snr_db: Option<(f64, f64)>,
    /// Playback-rate factor around 1.0; changes the length by `1 / rate`.
    pub time_stretch: Option<(f64, f64)>,
    /// Pitch shift in semitones; duration is preserved by crop/pad.
    pub pitch_shift_semitones: Option<(f64, f64)>,
    /// Gain in dB.
    pub gain_db: Option<(f64, f64)>,
    /// Chance that each enabled transform is applied, independently.
    pub probability: f64,
}

impl Default for SignalAugConfig {
    fn default() -> Self {
        Self {
            noise_snr_db: Some((15.0, 30.0)),
            time_stretch: Some((0.9, 1.1)),
            pitch_shift_semitones: Some((-2.0, 2.0)),
            gain_db: Some((-6.0, 6.0)),
            probability: 0.5,
        }
    }
}

impl SignalAugConfig {
    pub fn validate(&self) -> Result<(), AugmentError> {
        let check = |name: &str, range: Option<(f64, f64)>| {
            if let Some((lo, hi)) = range {
                if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                    return Err(AugmentError::InvalidParams(format!(
                        "{name} range ({lo}, {hi}) is not a finite non-empty range"
                    )));
                }
            }
            Ok(())
        };
        check("noise_snr_db", self.noise_snr_db)?;
        check("time_stretch", self.time_stretch)?;
        check("pitch_shift_semitones", self.pitch_shift_semitones)?;
        check("gain_db", self.gain_db)?;
        if let Some((lo, _)) = self.time_stretch {
            if lo <= 0.0 {
                return Err(AugmentError::InvalidParams(
                    "time stretch factors must be positive".into(),
                ));
            }
        }
        if !(0.0..=1.0).contains(&self.probability) {
            return Err(AugmentError::InvalidParams(format!(
                "probability must be in [0, 1], got {}",
                self.probability
            )));
        }
        Ok(())
    }

    /// Disabled entirely (the Model-D / Model-E setting).
    pub fn disabled() -> Self {
        Self {
            noise_snr_db: None,
            time_stretch: None,
            pitch_shift_semitones: None,
            gain_db: None,
            probability: 0.0,
        }
    }
}

/// Apply an independent random subset of the enabled transforms: each one
/// fires with `cfg.probability`. The label and sample rate of the clip are
/// untouched; the length may change through time stretching.
pub fn augment_signal(samples: &[f64], cfg: &SignalAugConfig, rng: &mut impl Rng) -> Vec<f64> {
    let mut out = samples.to_vec();

    if let Some((lo, hi)) = cfg.noise_snr_db {
        if rng.random::<f64>() < cfg.probability {
            let snr_db = rng.random_range(lo..=hi);
            add_noise(&mut out, snr_db, rng);
        }
    }
    if let Some((lo, hi)) = cfg.time_stretch {
        if rng.random::<f64>() < cfg.probability {
            let rate = rng.random_range(lo..=hi);
            out = resample(&out, rate);
        }
    }
    if let Some((lo, hi)) = cfg.pitch_shift_semitones {
        if rng.random::<f64>() < cfg.probability {
            let semitones = rng.random_range(lo..=hi);
            out = pitch_shift(&out, semitones);
        }
    }
    if let Some((lo, hi)) = cfg.gain_db {
        if rng.random::<f64>() < cfg.probability {
            let gain = 10.0_f64.powf(rng.random_range(lo..=hi) / 20.0);
            for s in &mut out {
                *s *= gain;
            }
        }
    }
    out
}

fn add_noise(samples: &mut [f64], snr_db: f64, rng: &mut impl Rng) {
    let power: f64 = samples.iter().map(|&s| s * s).sum::<f64>() / samples.len().max(1) as f64;
    if power == 0.0 {
        return;
    }
    let noise_std = (power / 10.0_f64.powf(snr_db / 10.0)).sqrt();
    let normal = Normal::new(0.0, noise_std).expect("std is finite and positive");
    for s in samples.iter_mut() {
        *s += normal.sample(rng);
    }
}

/// Linear-interpolation resampling at playback rate `rate`; output length is
/// `floor((len - 1) / rate) + 1`.
fn resample(samples: &[f64], rate: f64) -> Vec<f64> {
    if samples.is_empty() {
        return Vec::new();
    }
    let out_len = ((samples.len() - 1) as f64 / rate).floor() as usize + 1;
    (0..out_len)
        .map(|i| {
            let pos = i as f64 * rate;
            let left = pos.floor() as usize;
            let frac = pos - left as f64;
            if left + 1 < samples.len() {
                samples[left] * (1.0 - frac) + samples[left + 1] * frac
            } else {
                samples[left]
            }
        })
        .collect()
}

/// Shift pitch by resampling, then crop or zero-pad back to the original
/// length so downstream padding logic sees an unchanged duration.
fn pitch_shift(samples: &[f64], semitones: f64) -> Vec<f64> {
    let rate = 2.0_f64.powf(semitones / 12.0);
    let mut out = resample(samples, rate);
    out.resize(samples.len(), 0.0);
    out
}
