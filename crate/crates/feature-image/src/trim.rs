use crate::error::FeatureImageError;

/// Analysis block length in samples for silence detection (32 ms at 16 kHz).
pub const TRIM_BLOCK: usize = 512;

/// Remove leading/trailing silence and excise internal pauses longer than
/// `min_pause` seconds.
///
/// A block is silent when its RMS is more than `threshold_db` below the clip
/// peak (threshold_db is negative, e.g. -30.0). Internal silent gaps no
/// longer than `min_pause` are kept so that plosives and short stops survive.
pub fn trim_silence(
    samples: &[f64],
    sample_rate: u32,
    threshold_db: f64,
    min_pause: f64,
) -> Result<Vec<f64>, FeatureImageError> {
    let peak = samples.iter().fold(0.0_f64, |m, &s| m.max(s.abs()));
    if peak == 0.0 || samples.is_empty() {
        return Err(FeatureImageError::AllSilent);
    }
    let threshold_rms = peak * 10.0_f64.powf(threshold_db / 20.0);

    let n_blocks = samples.len().div_ceil(TRIM_BLOCK);
    let voiced: Vec<bool> = (0..n_blocks)
        .map(|b| {
            let start = b * TRIM_BLOCK;
            let end = (start + TRIM_BLOCK).min(samples.len());
            let sq: f64 = samples[start..end].iter().map(|&s| s * s).sum();
            (sq / (end - start) as f64).sqrt() > threshold_rms
        })
        .collect();

    let first = voiced.iter().position(|&v| v);
    let last = voiced.iter().rposition(|&v| v);
    let (first, last) = match (first, last) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(FeatureImageError::AllSilent),
    };

    let max_pause_samples = (min_pause * sample_rate as f64).round() as usize;
    let mut out = Vec::with_capacity(samples.len());
    let mut block = first;
    while block <= last {
        if voiced[block] {
            let start = block * TRIM_BLOCK;
            let end = ((block + 1) * TRIM_BLOCK).min(samples.len());
            out.extend_from_slice(&samples[start..end]);
            block += 1;
        } else {
            let gap_start = block;
            while block <= last && !voiced[block] {
                block += 1;
            }
            let gap_samples = (block - gap_start) * TRIM_BLOCK;
            if gap_samples <= max_pause_samples {
                let start = gap_start * TRIM_BLOCK;
                let end = (block * TRIM_BLOCK).min(samples.len());
                out.extend_from_slice(&samples[start..end]);
            }
        }
    }
    debug_assert!(!out.is_empty());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tone(freq: f64, sr: u32, secs: f64, amp: f64) -> Vec<f64> {
        let n = (secs * sr as f64) as usize;
        (0..n)
            .map(|i| amp * (2.0 * std::f64::consts::PI * freq * i as f64 / sr as f64).sin())
            .collect()
    }

    #[test]
    fn strips_leading_and_trailing_silence() {
        let sr = 16_000;
        let mut clip = vec![0.0; sr as usize / 2];
        clip.extend(tone(440.0, sr, 1.0, 0.8));
        clip.extend(vec![0.0; sr as usize / 2]);

        let trimmed = trim_silence(&clip, sr, -30.0, 0.1).unwrap();
        let expected = sr as usize; // 1 s of tone
        assert!(
            (trimmed.len() as isize - expected as isize).unsigned_abs() <= TRIM_BLOCK,
            "got {} samples, expected about {expected}",
            trimmed.len()
        );
    }

    #[test]
    fn keeps_short_pauses_and_cuts_long_ones() {
        let sr = 16_000;
        let mut clip = tone(300.0, sr, 0.5, 0.8);
        clip.extend(vec![0.0; (0.05 * sr as f64) as usize]); // 50 ms: kept
        clip.extend(tone(300.0, sr, 0.5, 0.8));
        clip.extend(vec![0.0; (0.5 * sr as f64) as usize]); // 500 ms: cut
        clip.extend(tone(300.0, sr, 0.5, 0.8));

        let trimmed = trim_silence(&clip, sr, -30.0, 0.1).unwrap();
        let expected = (1.55 * sr as f64) as usize;
        assert!(
            (trimmed.len() as isize - expected as isize).unsigned_abs() <= 2 * TRIM_BLOCK as isize as usize,
            "got {}, expected about {expected}",
            trimmed.len()
        );
    }

    #[test]
    fn loud_clip_passes_through_unchanged() {
        let sr = 16_000;
        let clip = tone(250.0, sr, 0.73, 0.9);
        let trimmed = trim_silence(&clip, sr, -30.0, 0.1).unwrap();
        assert_eq!(trimmed, clip);
    }

    #[test]
    fn all_zero_clip_is_an_error() {
        assert!(matches!(
            trim_silence(&vec![0.0; 8000], 16_000, -30.0, 0.1),
            Err(FeatureImageError::AllSilent)
        ));
    }
}
