use dsp_core::{
    chromagram, hpss, mel_filterbank, mel_filterbank_sized, mel_spectrogram, mfcc, power_to_db,
    spectral_contrast, stft, tonnetz, DspConfig, MelBank, Spectrogram,
};

use crate::compose::{compose, FeatureImage};
use crate::error::FeatureImageError;
use crate::label::LabelDistribution;
use crate::order::{FeatureBlock, FeatureOrder};

/// The six per-clip feature matrices, all sharing one frame count.
#[derive(Debug, Clone)]
pub struct FeatureBlocks {
    pub mfcc: Spectrogram,
    pub mel: Spectrogram,
    pub chroma: Spectrogram,
    pub contrast: Spectrogram,
    pub tonnetz: Spectrogram,
    pub hp_mel: Spectrogram,
}

impl FeatureBlocks {
    pub fn get(&self, block: FeatureBlock) -> &Spectrogram {
        match block {
            FeatureBlock::Mfcc => &self.mfcc,
            FeatureBlock::Mel => &self.mel,
            FeatureBlock::Chroma => &self.chroma,
            FeatureBlock::Contrast => &self.contrast,
            FeatureBlock::Tonnetz => &self.tonnetz,
            FeatureBlock::HpMel => &self.hp_mel,
        }
    }

    pub fn get_mut(&mut self, block: FeatureBlock) -> &mut Spectrogram {
        match block {
            FeatureBlock::Mfcc => &mut self.mfcc,
            FeatureBlock::Mel => &mut self.mel,
            FeatureBlock::Chroma => &mut self.chroma,
            FeatureBlock::Contrast => &mut self.contrast,
            FeatureBlock::Tonnetz => &mut self.tonnetz,
            FeatureBlock::HpMel => &mut self.hp_mel,
        }
    }
}

/// Computes the six feature blocks of a clip and assembles feature images.
///
/// The mel filterbanks are built once per extractor; everything else is pure
/// per-call work, so a single extractor can be shared across threads.
#[derive(Debug, Clone)]
pub struct FeatureExtractor {
    cfg: DspConfig,
    mel_bank: MelBank,
    hp_bank: MelBank,
}

impl FeatureExtractor {
    pub fn new(cfg: DspConfig) -> Result<Self, FeatureImageError> {
        cfg.validate()?;
        let mel_bank = mel_filterbank(&cfg);
        let hp_bank = mel_filterbank_sized(&cfg, cfg.n_hp_mels);
        Ok(Self {
            cfg,
            mel_bank,
            hp_bank,
        })
    }

    pub fn config(&self) -> &DspConfig {
        &self.cfg
    }

    /// Compute the six blocks from a (trimmed, possibly padded) signal.
    pub fn blocks(&self, samples: &[f64]) -> Result<FeatureBlocks, FeatureImageError> {
        let cfg = &self.cfg;
        let power = stft(samples, cfg)?;

        let mel = power_to_db(
            &mel_spectrogram(&power, &self.mel_bank),
            1.0,
            cfg.amplitude_floor,
            cfg.top_db,
        );
        let cepstra = mfcc(&mel, cfg.n_mfcc)?;
        let chroma = chromagram(&power);
        let contrast = spectral_contrast(&power, cfg)?;
        let centroids = tonnetz(&chroma);

        let (harmonic, percussive) = hpss(&power, cfg);
        let h_mel = power_to_db(
            &mel_spectrogram(&harmonic, &self.hp_bank),
            1.0,
            cfg.amplitude_floor,
            cfg.top_db,
        );
        let p_mel = power_to_db(
            &mel_spectrogram(&percussive, &self.hp_bank),
            1.0,
            cfg.amplitude_floor,
            cfg.top_db,
        );
        let mut hp_mel = h_mel;
        hp_mel.data = (&hp_mel.data + &p_mel.data) / 2.0;

        Ok(FeatureBlocks {
            mfcc: cepstra,
            mel,
            chroma,
            contrast,
            tonnetz: centroids,
            hp_mel,
        })
    }

    /// Full clip-to-image path.
    pub fn extract(
        &self,
        samples: &[f64],
        order: &FeatureOrder,
        source_id: impl Into<String>,
        label: LabelDistribution,
    ) -> Result<FeatureImage, FeatureImageError> {
        let blocks = self.blocks(samples)?;
        compose(&blocks, order, source_id, label)
    }
}
