use std::ops::Range;

use feature_image::{FeatureImage, LabelDistribution};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Beta, Distribution};

use crate::error::AugmentError;

/// CutMix sampling parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutMixParams {
    /// Concentration of the Beta(alpha, alpha) mixing-ratio prior.
    pub alpha: f64,
    /// Chance that a given training pair is mixed at all.
    pub probability: f64,
}

impl Default for CutMixParams {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            probability: 0.5,
        }
    }
}

impl CutMixParams {
    pub fn validate(&self) -> Result<(), AugmentError> {
        if !(self.alpha > 0.0) {
            return Err(AugmentError::InvalidParams(format!(
                "alpha must be positive, got {}",
                self.alpha
            )));
        }
        if !(0.0..=1.0).contains(&self.probability) {
            return Err(AugmentError::InvalidParams(format!(
                "probability must be in [0, 1], got {}",
                self.probability
            )));
        }
        Ok(())
    }
}

/// One CutMix application: the mixed image, the mixing ratio actually
/// realized, and the pasted patch (time range, row range).
#[derive(Debug, Clone)]
pub struct CutMixResult {
    pub image: FeatureImage,
    /// Fraction of pixels still owned by `a`, recomputed from the exact
    /// integer patch area.
    pub lambda: f64,
    pub patch: (Range<usize>, Range<usize>),
}

/// Paste a rectangular patch of `b` into `a`, mixing labels by the realized
/// patch area.
///
/// The patch targets an area fraction of `1 - lambda` with uniformly random
/// aspect and position; dimensions round to whole pixels and the patch is
/// always placed fully inside the image, so `lambda == 0` pastes all of `b`
/// and `lambda == 1` leaves `a` untouched. The returned `lambda` is
/// recomputed from the integer area, and the mixed label uses that value.
pub fn cutmix(
    a: &FeatureImage,
    b: &FeatureImage,
    lambda: f64,
    rng: &mut impl Rng,
) -> Result<CutMixResult, AugmentError> {
    if a.data().dim() != b.data().dim() {
        return Err(AugmentError::ShapeMismatch {
            a: a.data().dim(),
            b: b.data().dim(),
        });
    }
    assert!((0.0..=1.0).contains(&lambda), "lambda must be in [0, 1]");

    let (_, width, height) = a.data().dim();
    let total = (width * height) as f64;
    let target_area = (1.0 - lambda) * total;

    let (patch_w, patch_h) = if target_area < 0.5 {
        (0, 0)
    } else {
        let min_w = ((target_area / height as f64).ceil() as usize).clamp(1, width);
        let w = rng.random_range(min_w..=width);
        let h = ((target_area / w as f64).round() as usize).clamp(1, height);
        (w, h)
    };

    let (t0, r0) = (
        rng.random_range(0..=width - patch_w),
        rng.random_range(0..=height - patch_h),
    );
    let patch = (t0..t0 + patch_w, r0..r0 + patch_h);

    let realized = 1.0 - (patch_w * patch_h) as f64 / total;
    let mut image = a.clone();
    image
        .data_mut()
        .slice_mut(ndarray::s![.., patch.0.clone(), patch.1.clone()])
        .assign(&b.data().slice(ndarray::s![.., patch.0.clone(), patch.1.clone()]));
    image.set_label(LabelDistribution::mix(a.label(), b.label(), realized));

    Ok(CutMixResult {
        image,
        lambda: realized,
        patch,
    })
}

/// In-batch CutMix: pair every image with a shuffle partner and mix each
/// pair with `params.probability`, drawing the ratio from Beta(alpha, alpha).
/// Sources are the unmixed inputs, so order of application does not matter.
pub fn cutmix_batch(
    images: &mut [FeatureImage],
    params: &CutMixParams,
    rng: &mut impl Rng,
) -> Result<(), AugmentError> {
    params.validate()?;
    if images.len() < 2 {
        return Ok(());
    }
    let beta = Beta::new(params.alpha, params.alpha)
        .map_err(|e| AugmentError::InvalidParams(e.to_string()))?;

    let mut partners: Vec<usize> = (0..images.len()).collect();
    partners.shuffle(rng);

    let sources = images.to_vec();
    for (i, image) in images.iter_mut().enumerate() {
        if rng.random::<f64>() < params.probability {
            let lambda = beta.sample(rng);
            let mixed = cutmix(&sources[i], &sources[partners[i]], lambda, rng)?;
            *image = mixed.image;
        }
    }
    Ok(())
}
