use std::fmt;
use std::str::FromStr;

use crate::error::FeatureImageError;

/// The six feature blocks that stack into one image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FeatureBlock {
    Mfcc,
    Mel,
    Chroma,
    Contrast,
    Tonnetz,
    /// Average of the mel spectrograms of the harmonic and percussive parts.
    HpMel,
}

impl FeatureBlock {
    pub const ALL: [FeatureBlock; 6] = [
        FeatureBlock::Mfcc,
        FeatureBlock::Mel,
        FeatureBlock::Chroma,
        FeatureBlock::Contrast,
        FeatureBlock::Tonnetz,
        FeatureBlock::HpMel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FeatureBlock::Mfcc => "mfcc",
            FeatureBlock::Mel => "mel",
            FeatureBlock::Chroma => "chroma",
            FeatureBlock::Contrast => "contrast",
            FeatureBlock::Tonnetz => "tonnetz",
            FeatureBlock::HpMel => "hp_mel",
        }
    }
}

impl fmt::Display for FeatureBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FeatureBlock {
    type Err = FeatureImageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FeatureBlock::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or(FeatureImageError::InvalidOrder)
    }
}

/// A permutation of the six blocks; the stacking order within the image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeatureOrder([FeatureBlock; 6]);

impl FeatureOrder {
    pub fn new(blocks: [FeatureBlock; 6]) -> Result<Self, FeatureImageError> {
        for b in FeatureBlock::ALL {
            if blocks.iter().filter(|&&x| x == b).count() != 1 {
                return Err(FeatureImageError::InvalidOrder);
            }
        }
        Ok(Self(blocks))
    }

    pub fn blocks(&self) -> &[FeatureBlock; 6] {
        &self.0
    }

    /// All 720 stacking orders, in lexicographic order of block indices.
    pub fn all_permutations() -> Vec<FeatureOrder> {
        let mut out = Vec::with_capacity(720);
        let mut current = [FeatureBlock::Mfcc; 6];
        let mut used = [false; 6];
        fn recurse(
            depth: usize,
            current: &mut [FeatureBlock; 6],
            used: &mut [bool; 6],
            out: &mut Vec<FeatureOrder>,
        ) {
            if depth == 6 {
                out.push(FeatureOrder(*current));
                return;
            }
            for (i, block) in FeatureBlock::ALL.into_iter().enumerate() {
                if !used[i] {
                    used[i] = true;
                    current[depth] = block;
                    recurse(depth + 1, current, used, out);
                    used[i] = false;
                }
            }
        }
        recurse(0, &mut current, &mut used, &mut out);
        out
    }

    pub fn parse_names(names: &[String]) -> Result<Self, FeatureImageError> {
        if names.len() != 6 {
            return Err(FeatureImageError::InvalidOrder);
        }
        let mut blocks = [FeatureBlock::Mfcc; 6];
        for (slot, name) in blocks.iter_mut().zip(names) {
            *slot = name.parse()?;
        }
        FeatureOrder::new(blocks)
    }
}

impl Default for FeatureOrder {
    fn default() -> Self {
        Self(FeatureBlock::ALL)
    }
}

impl fmt::Display for FeatureOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|b| b.name()).collect();
        f.write_str(&names.join(","))
    }
}
