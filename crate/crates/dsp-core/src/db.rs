use crate::spectrogram::Spectrogram;

/// Convert a power spectrogram to decibels:
/// `10 log10(max(power, floor) / max(reference, floor))`, then clamp to
/// `[max - top_db, max]` when `top_db` is given.
pub fn power_to_db(
    power: &Spectrogram,
    reference: f64,
    amplitude_floor: f64,
    top_db: Option<f64>,
) -> Spectrogram {
    assert!(reference > 0.0, "reference power must be positive");
    assert!(amplitude_floor > 0.0, "amplitude floor must be positive");

    let ref_db = 10.0 * reference.max(amplitude_floor).log10();
    let mut data = power.data.mapv(|p| 10.0 * p.max(amplitude_floor).log10() - ref_db);

    if let Some(top) = top_db {
        let max = data.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let floor_db = max - top;
        data.mapv_inplace(|v| v.max(floor_db));
    }

    Spectrogram {
        data,
        bin_axis: power.bin_axis,
        frame_hop: power.frame_hop,
        sample_rate: power.sample_rate,
    }
}
