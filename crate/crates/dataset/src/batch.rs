use ndarray::{Array2, Array4};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use augment::{augment_signal, cutmix_batch, CutMixParams, SignalAugConfig};
use feature_image::{trim_silence, FeatureExtractor, FeatureImage, FeatureOrder, IMAGE_HEIGHT};

use crate::emodb::{AudioClip, N_CLASSES};
use crate::error::DatasetError;

/// Clip-to-image processing shared by every batch.
#[derive(Debug, Clone)]
pub struct BatchPipeline {
    pub extractor: FeatureExtractor,
    pub order: FeatureOrder,
    /// Silence threshold relative to clip peak, dB (negative).
    pub trim_threshold_db: f64,
    /// Longest internal pause kept, seconds.
    pub trim_min_pause: f64,
    /// Signal-level transforms; only applied when the batch is assembled
    /// with augmentation on.
    pub signal_aug: Option<SignalAugConfig>,
    /// In-batch CutMix; only applied when augmentation is on.
    pub cutmix: Option<CutMixParams>,
}

impl BatchPipeline {
    pub fn new(extractor: FeatureExtractor, order: FeatureOrder) -> Self {
        Self {
            extractor,
            order,
            trim_threshold_db: -30.0,
            trim_min_pause: 0.1,
            signal_aug: None,
            cutmix: None,
        }
    }
}

/// Batch shape policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BatchingMode {
    /// Pad raw signals to the longest clip in each batch before extraction,
    /// so the whole batch shares one image width.
    PadToMax { batch_size: usize },
    /// No padding: one clip per batch at its native width. Callers emulate a
    /// larger batch by accumulating gradients.
    SingleClip,
}

impl BatchingMode {
    pub fn batch_size(self) -> usize {
        match self {
            BatchingMode::PadToMax { batch_size } => batch_size,
            BatchingMode::SingleClip => 1,
        }
    }
}

/// A stacked batch of equally wide feature images with label distributions.
#[derive(Debug, Clone)]
pub struct LabeledBatch {
    /// `[B, 3, W_max, 230]`.
    pub images: Array4<f32>,
    /// `[B, N_CLASSES]` label distributions.
    pub labels: Array2<f64>,
    /// Per-item frame counts before padding; frames beyond them are zero.
    pub valid_widths: Vec<usize>,
    /// Clip ids, for diagnostics.
    pub ids: Vec<String>,
}

impl LabeledBatch {
    pub fn len(&self) -> usize {
        self.valid_widths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.valid_widths.is_empty()
    }

    pub fn width(&self) -> usize {
        self.images.dim().2
    }
}

/// Deterministic per-epoch batch assembly over a list of corpus indices.
///
/// Every random draw is derived from `(seed, epoch, clip or batch index)`,
/// so outputs are reproducible no matter how many worker threads rayon uses.
pub struct Batcher<'a> {
    corpus: &'a [AudioClip],
    clip_indices: Vec<usize>,
    pipeline: BatchPipeline,
    mode: BatchingMode,
    seed: u64,
}

impl<'a> Batcher<'a> {
    pub fn new(
        corpus: &'a [AudioClip],
        clip_indices: Vec<usize>,
        pipeline: BatchPipeline,
        mode: BatchingMode,
        seed: u64,
    ) -> Self {
        Self {
            corpus,
            clip_indices,
            pipeline,
            mode,
            seed,
        }
    }

    pub fn n_clips(&self) -> usize {
        self.clip_indices.len()
    }

    /// Number of batches per epoch; the final partial batch is kept.
    pub fn n_batches(&self) -> usize {
        self.clip_indices.len().div_ceil(self.mode.batch_size())
    }

    /// The shuffled batch plan for one epoch: each training clip appears in
    /// exactly one batch.
    pub fn epoch_plan(&self, epoch: u64) -> Vec<Vec<usize>> {
        let mut order = self.clip_indices.clone();
        order.shuffle(&mut derive_rng(self.seed, &[0xE0, epoch, 0]));
        order
            .chunks(self.mode.batch_size())
            .map(|c| c.to_vec())
            .collect()
    }

    /// Assemble the batches of one epoch lazily.
    pub fn epoch<'b>(
        &'b self,
        epoch: u64,
        augmented: bool,
    ) -> impl Iterator<Item = Result<LabeledBatch, DatasetError>> + 'b {
        self.epoch_plan(epoch)
            .into_iter()
            .enumerate()
            .map(move |(batch_idx, clip_ids)| {
                self.assemble(&clip_ids, epoch, batch_idx as u64, augmented)
            })
    }

    /// Build one batch: trim, optionally augment, zero-pad the raw signals
    /// to the batch maximum, extract features, then optionally CutMix.
    pub fn assemble(
        &self,
        clips: &[usize],
        epoch: u64,
        batch_idx: u64,
        augmented: bool,
    ) -> Result<LabeledBatch, DatasetError> {
        assert!(!clips.is_empty(), "batches hold at least one clip");
        let pipeline = &self.pipeline;

        // Trim and per-clip signal augmentation; rngs keyed by clip index so
        // thread scheduling cannot change results.
        let mut signals: Vec<Vec<f64>> = clips
            .par_iter()
            .map(|&clip_idx| {
                let clip = &self.corpus[clip_idx];
                let trimmed = trim_silence(
                    &clip.samples,
                    clip.sample_rate,
                    pipeline.trim_threshold_db,
                    pipeline.trim_min_pause,
                )
                .map_err(|source| DatasetError::Pipeline {
                    clip: clip.id.clone(),
                    source,
                })?;
                if augmented {
                    if let Some(cfg) = &pipeline.signal_aug {
                        let mut rng = derive_rng(self.seed, &[0xA0, epoch, clip_idx as u64]);
                        return Ok(augment_signal(&trimmed, cfg, &mut rng));
                    }
                }
                Ok(trimmed)
            })
            .collect::<Result<_, DatasetError>>()?;

        // Frame counts at the true lengths, then signal-level padding.
        let hop = pipeline.extractor.config().hop;
        let frame_len = pipeline.extractor.config().frame_length;
        let valid_widths: Vec<usize> = signals
            .iter()
            .map(|s| 1 + s.len().max(frame_len) / hop)
            .collect();
        if matches!(self.mode, BatchingMode::PadToMax { .. }) {
            let max_len = signals.iter().map(Vec::len).max().unwrap_or(0);
            for s in &mut signals {
                s.resize(max_len, 0.0);
            }
        }

        let mut images: Vec<FeatureImage> = clips
            .par_iter()
            .zip(signals.par_iter())
            .zip(valid_widths.par_iter())
            .map(|((&clip_idx, signal), &valid)| {
                let clip = &self.corpus[clip_idx];
                let mut padded = signal.clone();
                if padded.len() < frame_len {
                    padded.resize(frame_len, 0.0);
                }
                let mut image = pipeline
                    .extractor
                    .extract(
                        &padded,
                        &pipeline.order,
                        clip.id.clone(),
                        clip.label.as_distribution(),
                    )
                    .map_err(|source| DatasetError::Pipeline {
                        clip: clip.id.clone(),
                        source,
                    })?;
                image.zero_frames_from(valid);
                Ok(image)
            })
            .collect::<Result<_, DatasetError>>()?;

        if augmented {
            if let Some(params) = &pipeline.cutmix {
                let mut rng = derive_rng(self.seed, &[0xC0, epoch, batch_idx]);
                cutmix_batch(&mut images, params, &mut rng)?;
            }
        }

        Ok(stack(images))
    }
}

/// Stack equally sized images into the batch tensors.
fn stack(images: Vec<FeatureImage>) -> LabeledBatch {
    let width = images.iter().map(|i| i.width()).max().unwrap_or(0);
    debug_assert!(images.iter().all(|i| i.width() == width));

    let n = images.len();
    let mut tensor = Array4::<f32>::zeros((n, 3, width, IMAGE_HEIGHT));
    let mut labels = Array2::<f64>::zeros((n, N_CLASSES));
    let mut valid_widths = Vec::with_capacity(n);
    let mut ids = Vec::with_capacity(n);
    for (b, image) in images.into_iter().enumerate() {
        tensor
            .index_axis_mut(ndarray::Axis(0), b)
            .assign(image.data());
        for (k, &v) in image.label().values().iter().enumerate() {
            labels[[b, k]] = v;
        }
        // The valid width is wherever content stops; trailing frames are
        // zeroed during assembly.
        valid_widths.push(image.width());
        ids.push(image.source_id().to_string());
    }
    LabeledBatch {
        images: tensor,
        labels,
        valid_widths,
        ids,
    }
}

/// A ChaCha generator keyed by the run seed plus a stream of path words, so
/// independent pipeline stages never share a stream.
fn derive_rng(seed: u64, path: &[u64]) -> ChaCha20Rng {
    let mut state = seed ^ 0x51_7C_C1_B7_27_22_0A_95;
    for &word in path {
        state ^= word.wrapping_add(0x9E37_79B9_7F4A_7C15);
        state = state.rotate_left(23).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    }
    ChaCha20Rng::seed_from_u64(state)
}
