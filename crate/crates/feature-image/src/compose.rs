use ndarray::{Array3, ArrayView2, Axis};
use std::ops::Range;

use crate::error::FeatureImageError;
use crate::extract::FeatureBlocks;
use crate::label::LabelDistribution;
use crate::order::{FeatureBlock, FeatureOrder};

/// Total feature rows across the six stacked blocks.
pub const IMAGE_HEIGHT: usize = 230;

/// A 3-channel feature image of shape `[3, width, IMAGE_HEIGHT]`
/// (channel x time x feature-row) plus the row layout that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureImage {
    data: Array3<f32>,
    layout: Vec<(FeatureBlock, Range<usize>)>,
    source_id: String,
    label: LabelDistribution,
}

impl FeatureImage {
    pub fn from_parts(
        data: Array3<f32>,
        layout: Vec<(FeatureBlock, Range<usize>)>,
        source_id: String,
        label: LabelDistribution,
    ) -> Self {
        assert_eq!(data.dim().0, 3, "feature images have 3 channels");
        assert_eq!(data.dim().2, IMAGE_HEIGHT, "feature images are 230 rows tall");
        Self {
            data,
            layout,
            source_id,
            label,
        }
    }

    pub fn data(&self) -> &Array3<f32> {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut Array3<f32> {
        &mut self.data
    }

    /// Frame count (time axis).
    pub fn width(&self) -> usize {
        self.data.dim().1
    }

    pub fn layout(&self) -> &[(FeatureBlock, Range<usize>)] {
        &self.layout
    }

    pub fn source_id(&self) -> &str {
        &self.source_id
    }

    pub fn label(&self) -> &LabelDistribution {
        &self.label
    }

    pub fn set_label(&mut self, label: LabelDistribution) {
        self.label = label;
    }

    /// Channel-0 rows of one block, transposed back to `[rows x frames]`.
    pub fn block_rows(&self, block: FeatureBlock) -> Option<ndarray::Array2<f32>> {
        let range = self
            .layout
            .iter()
            .find(|(b, _)| *b == block)
            .map(|(_, r)| r.clone())?;
        let view = self
            .data
            .index_axis(Axis(0), 0)
            .slice_move(ndarray::s![.., range])
            .reversed_axes();
        Some(view.to_owned())
    }

    /// Zero every channel at frames `>= valid_width`; used when batching
    /// images extracted from padded signals.
    pub fn zero_frames_from(&mut self, valid_width: usize) {
        let width = self.width();
        if valid_width < width {
            self.data
                .slice_mut(ndarray::s![.., valid_width.., ..])
                .fill(0.0);
        }
    }
}

/// Stack the six blocks in the given order into a feature image.
///
/// Each block is min-max normalized to `[0, 1]` on its own (a constant block
/// maps to all zeros), channel 1 is the first temporal difference of the
/// stack and channel 2 the second; the last frame of each difference channel
/// is zero-padded. The time axis is never aggregated.
pub fn compose(
    blocks: &FeatureBlocks,
    order: &FeatureOrder,
    source_id: impl Into<String>,
    label: LabelDistribution,
) -> Result<FeatureImage, FeatureImageError> {
    let frames = blocks.get(order.blocks()[0]).frames();
    let mismatched: Vec<(&'static str, usize)> = FeatureBlock::ALL
        .iter()
        .map(|&b| (b.name(), blocks.get(b).frames()))
        .collect();
    if mismatched.iter().any(|&(_, f)| f != frames) {
        return Err(FeatureImageError::FrameCountMismatch(mismatched));
    }
    if frames < 2 {
        return Err(FeatureImageError::TooFewFrames(frames));
    }
    let total_height: usize = FeatureBlock::ALL.iter().map(|&b| blocks.get(b).bins()).sum();
    if total_height != IMAGE_HEIGHT {
        return Err(FeatureImageError::HeightMismatch {
            got: total_height,
            expected: IMAGE_HEIGHT,
        });
    }

    let mut data = Array3::<f32>::zeros((3, frames, IMAGE_HEIGHT));
    let mut layout = Vec::with_capacity(6);
    let mut row = 0;
    for &block in order.blocks() {
        let spec = blocks.get(block);
        let height = spec.bins();
        write_normalized(&mut data, spec.data.view(), row);
        layout.push((block, row..row + height));
        row += height;
    }

    // Temporal differences of channel 0; trailing frame left at zero.
    for t in 0..frames - 1 {
        for r in 0..IMAGE_HEIGHT {
            data[[1, t, r]] = data[[0, t + 1, r]] - data[[0, t, r]];
        }
    }
    for t in 0..frames.saturating_sub(2) {
        for r in 0..IMAGE_HEIGHT {
            data[[2, t, r]] = data[[1, t + 1, r]] - data[[1, t, r]];
        }
    }

    Ok(FeatureImage {
        data,
        layout,
        source_id: source_id.into(),
        label,
    })
}

/// Min-max normalize one `[rows x frames]` block into channel 0 starting at
/// `row_offset`, transposing to the image's `[time x row]` orientation.
fn write_normalized(data: &mut Array3<f32>, block: ArrayView2<'_, f64>, row_offset: usize) {
    let (min, max) = block
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let span = max - min;
    for (r, band) in block.rows().into_iter().enumerate() {
        for (t, &v) in band.iter().enumerate() {
            let normalized = if span > 0.0 { (v - min) / span } else { 0.0 };
            data[[0, t, row_offset + r]] = normalized as f32;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::FeatureBlocks;
    use dsp_core::{BinAxis, Spectrogram};
    use ndarray::Array2;

    fn spec(rows: usize, frames: usize, seed: u64) -> Spectrogram {
        let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15) | 1;
        let data = Array2::from_shape_fn((rows, frames), |_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 10_000) as f64 / 100.0 - 50.0
        });
        Spectrogram {
            data,
            bin_axis: BinAxis::Mel,
            frame_hop: 512,
            sample_rate: 16_000,
        }
    }

    fn blocks(frames: usize) -> FeatureBlocks {
        FeatureBlocks {
            mfcc: spec(40, frames, 1),
            mel: spec(128, frames, 2),
            chroma: spec(12, frames, 3),
            contrast: spec(7, frames, 4),
            tonnetz: spec(6, frames, 5),
            hp_mel: spec(37, frames, 6),
        }
    }

    fn any_label() -> LabelDistribution {
        LabelDistribution::one_hot(2, 7)
    }

    #[test]
    fn composed_shape_is_3_by_width_by_230() {
        let image = compose(&blocks(100), &FeatureOrder::default(), "clip", any_label()).unwrap();
        assert_eq!(image.data().dim(), (3, 100, 230));
        assert_eq!(image.width(), 100);
    }

    #[test]
    fn channel0_values_lie_in_unit_interval() {
        let image = compose(&blocks(40), &FeatureOrder::default(), "clip", any_label()).unwrap();
        for &v in image.data().index_axis(Axis(0), 0).iter() {
            assert!((0.0..=1.0).contains(&v), "value {v}");
        }
    }

    #[test]
    fn constant_block_normalizes_to_zero() {
        let mut b = blocks(10);
        b.chroma.data.fill(4.2);
        let image = compose(&b, &FeatureOrder::default(), "clip", any_label()).unwrap();
        let rows = image.block_rows(FeatureBlock::Chroma).unwrap();
        assert!(rows.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn channel1_is_the_temporal_difference() {
        let image = compose(&blocks(25), &FeatureOrder::default(), "clip", any_label()).unwrap();
        let d = image.data();
        for t in 0..24 {
            for r in 0..230 {
                assert_eq!(d[[1, t, r]], d[[0, t + 1, r]] - d[[0, t, r]]);
            }
        }
        for r in 0..230 {
            assert_eq!(d[[1, 24, r]], 0.0);
            assert_eq!(d[[2, 23, r]], d[[1, 24, r]] - d[[1, 23, r]]);
        }
    }

    #[test]
    fn layout_round_trips_each_block() {
        let b = blocks(31);
        for order in [
            FeatureOrder::default(),
            FeatureOrder::new([
                FeatureBlock::Tonnetz,
                FeatureBlock::HpMel,
                FeatureBlock::Mel,
                FeatureBlock::Contrast,
                FeatureBlock::Chroma,
                FeatureBlock::Mfcc,
            ])
            .unwrap(),
        ] {
            let image = compose(&b, &order, "clip", any_label()).unwrap();
            let ranges: Vec<_> = image.layout().to_vec();
            // Ranges partition [0, 230) in order.
            assert_eq!(ranges.first().unwrap().1.start, 0);
            assert_eq!(ranges.last().unwrap().1.end, 230);
            for pair in ranges.windows(2) {
                assert_eq!(pair[0].1.end, pair[1].1.start);
            }

            for &block in order.blocks() {
                let got = image.block_rows(block).unwrap();
                let src = &b.get(block).data;
                let (min, max) = src
                    .iter()
                    .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                        (lo.min(v), hi.max(v))
                    });
                for (got_v, &src_v) in got.iter().zip(src.iter()) {
                    let expected = ((src_v - min) / (max - min)) as f32;
                    assert_eq!(*got_v, expected);
                }
            }
        }
    }

    #[test]
    fn normalization_is_idempotent() {
        // Blocks already spanning [0, 1] exactly come through unchanged.
        let mut b = blocks(12);
        for block in FeatureBlock::ALL {
            let data = &mut b.get_mut(block).data;
            let (min, max) = data
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                    (lo.min(v), hi.max(v))
                });
            data.mapv_inplace(|v| (v - min) / (max - min));
        }
        let image = compose(&b, &FeatureOrder::default(), "clip", any_label()).unwrap();
        for block in FeatureBlock::ALL {
            let got = image.block_rows(block).unwrap();
            for (got_v, &src_v) in got.iter().zip(b.get(block).data.iter()) {
                assert_eq!(*got_v, src_v as f32);
            }
        }
    }

    #[test]
    fn frame_mismatch_is_an_error() {
        let mut b = blocks(20);
        b.tonnetz = spec(6, 21, 9);
        assert!(matches!(
            compose(&b, &FeatureOrder::default(), "clip", any_label()),
            Err(FeatureImageError::FrameCountMismatch(_))
        ));
    }

    #[test]
    fn wrong_total_height_is_an_error() {
        let mut b = blocks(20);
        b.mel = spec(100, 20, 9);
        match compose(&b, &FeatureOrder::default(), "clip", any_label()) {
            Err(FeatureImageError::HeightMismatch { got: 202, expected: 230 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn single_frame_is_an_error() {
        assert!(matches!(
            compose(&blocks(1), &FeatureOrder::default(), "clip", any_label()),
            Err(FeatureImageError::TooFewFrames(1))
        ));
    }

    #[test]
    fn zero_frames_from_masks_the_tail() {
        let mut image = compose(&blocks(30), &FeatureOrder::default(), "clip", any_label()).unwrap();
        image.zero_frames_from(20);
        for c in 0..3 {
            for t in 20..30 {
                for r in 0..230 {
                    assert_eq!(image.data()[[c, t, r]], 0.0);
                }
            }
        }
        assert!(image.data().iter().any(|&v| v != 0.0));
    }
}
