use std::fmt;
use std::path::{Path, PathBuf};

use feature_image::LabelDistribution;

use crate::error::DatasetError;

/// Number of emotion classes in Berlin EmoDB.
pub const N_CLASSES: usize = 7;

/// The seven EmoDB emotions. Ordering is fixed and shared by label
/// distributions, confusion matrices and report keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EmotionLabel {
    Fear,
    Sadness,
    Disgust,
    Anger,
    Boredom,
    Neutral,
    Happiness,
}

impl EmotionLabel {
    pub const ALL: [EmotionLabel; N_CLASSES] = [
        EmotionLabel::Fear,
        EmotionLabel::Sadness,
        EmotionLabel::Disgust,
        EmotionLabel::Anger,
        EmotionLabel::Boredom,
        EmotionLabel::Neutral,
        EmotionLabel::Happiness,
    ];

    /// Class index into label distributions and confusion matrices.
    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap()
    }

    pub fn from_index(index: usize) -> Option<Self> {
        Self::ALL.get(index).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            EmotionLabel::Fear => "fear",
            EmotionLabel::Sadness => "sadness",
            EmotionLabel::Disgust => "disgust",
            EmotionLabel::Anger => "anger",
            EmotionLabel::Boredom => "boredom",
            EmotionLabel::Neutral => "neutral",
            EmotionLabel::Happiness => "happiness",
        }
    }

    /// EmoDB filename letter (German emotion names).
    pub fn from_letter(letter: char) -> Option<Self> {
        match letter {
            'A' => Some(EmotionLabel::Fear),      // Angst
            'T' => Some(EmotionLabel::Sadness),   // Trauer
            'E' => Some(EmotionLabel::Disgust),   // Ekel
            'W' => Some(EmotionLabel::Anger),     // Wut
            'L' => Some(EmotionLabel::Boredom),   // Langeweile
            'N' => Some(EmotionLabel::Neutral),   // Neutral
            'F' => Some(EmotionLabel::Happiness), // Freude
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            EmotionLabel::Fear => 'A',
            EmotionLabel::Sadness => 'T',
            EmotionLabel::Disgust => 'E',
            EmotionLabel::Anger => 'W',
            EmotionLabel::Boredom => 'L',
            EmotionLabel::Neutral => 'N',
            EmotionLabel::Happiness => 'F',
        }
    }

    /// One-hot distribution over the seven classes.
    pub fn as_distribution(self) -> LabelDistribution {
        LabelDistribution::one_hot(self.index(), N_CLASSES)
    }
}

impl fmt::Display for EmotionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One EmoDB utterance: decoded samples plus the metadata encoded in the
/// filename.
#[derive(Debug, Clone)]
pub struct AudioClip {
    /// Mono samples in [-1, 1].
    pub samples: Vec<f64>,
    pub sample_rate: u32,
    pub label: EmotionLabel,
    /// Two-digit speaker id, e.g. "03".
    pub speaker: String,
    /// Three-character text code, e.g. "a01".
    pub text_code: String,
    /// Version suffix, usually one letter.
    pub version: String,
    /// File stem, e.g. "03a01Wa"; used as the clip identifier.
    pub id: String,
}

/// Parsed fields of an EmoDB filename, without decoding the audio.
pub fn parse_emodb_filename(
    path: &Path,
) -> Result<(String, String, EmotionLabel, String), DatasetError> {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .ok_or_else(|| DatasetError::BadFilename(path.to_path_buf()))?;
    let chars: Vec<char> = stem.chars().collect();
    // Positions: speaker id (2 digits), text code (3), emotion letter, version.
    if chars.len() < 7 || !chars[0].is_ascii_digit() || !chars[1].is_ascii_digit() {
        return Err(DatasetError::BadFilename(path.to_path_buf()));
    }
    let speaker: String = chars[0..2].iter().collect();
    let text_code: String = chars[2..5].iter().collect();
    let label = EmotionLabel::from_letter(chars[5]).ok_or(DatasetError::UnknownEmotion {
        letter: chars[5],
        file: path.to_path_buf(),
    })?;
    let version: String = chars[6..].iter().collect();
    Ok((speaker, text_code, label, version))
}

/// Load every `.wav` under `root` as an EmoDB clip, sorted by filename.
///
/// EmoDB ships as mono 16-bit PCM at 16 kHz; anything else is an error
/// rather than being silently resampled. A corpus that is not exactly 535
/// clips logs a warning (partial corpora are fine for tests).
pub fn load_emodb(root: &Path) -> Result<Vec<AudioClip>, DatasetError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(root)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| {
            p.extension()
                .and_then(|e| e.to_str())
                .is_some_and(|e| e.eq_ignore_ascii_case("wav"))
        })
        .collect();
    paths.sort();

    let mut corpus = Vec::with_capacity(paths.len());
    for path in paths {
        let (speaker, text_code, label, version) = parse_emodb_filename(&path)?;
        let samples = read_wav_16k_mono(&path)?;
        let id = path.file_stem().unwrap().to_string_lossy().into_owned();
        corpus.push(AudioClip {
            samples,
            sample_rate: 16_000,
            label,
            speaker,
            text_code,
            version,
            id,
        });
    }

    if corpus.len() != 535 {
        log::warn!(
            "EmoDB at {} has {} clips, expected 535",
            root.display(),
            corpus.len()
        );
    }
    Ok(corpus)
}

fn read_wav_16k_mono(path: &Path) -> Result<Vec<f64>, DatasetError> {
    let reader = hound::WavReader::open(path).map_err(|source| DatasetError::Wav {
        file: path.to_path_buf(),
        source,
    })?;
    let spec = reader.spec();
    if spec.channels != 1
        || spec.sample_rate != 16_000
        || spec.bits_per_sample != 16
        || spec.sample_format != hound::SampleFormat::Int
    {
        return Err(DatasetError::UnsupportedWav {
            file: path.to_path_buf(),
            detail: format!(
                "{} ch, {} Hz, {} bit",
                spec.channels, spec.sample_rate, spec.bits_per_sample
            ),
        });
    }
    reader
        .into_samples::<i16>()
        .map(|s| {
            s.map(|v| v as f64 / 32_768.0).map_err(|source| DatasetError::Wav {
                file: path.to_path_buf(),
                source,
            })
        })
        .collect()
}

/// Write mono f64 samples as 16-bit PCM at 16 kHz; used to build synthetic
/// corpora for tests.
pub fn write_wav(path: &Path, samples: &[f64], sample_rate: u32) -> Result<(), DatasetError> {
    let spec = hound::WavSpec {
        channels: 1,
        sample_rate,
        bits_per_sample: 16,
        sample_format: hound::SampleFormat::Int,
    };
    let mut writer = hound::WavWriter::create(path, spec).map_err(|source| DatasetError::Wav {
        file: path.to_path_buf(),
        source,
    })?;
    for &s in samples {
        let q = (s.clamp(-1.0, 1.0) * 32_767.0).round() as i16;
        writer.write_sample(q).map_err(|source| DatasetError::Wav {
            file: path.to_path_buf(),
            source,
        })?;
    }
    writer.finalize().map_err(|source| DatasetError::Wav {
        file: path.to_path_buf(),
        source,
    })?;
    Ok(())
}
