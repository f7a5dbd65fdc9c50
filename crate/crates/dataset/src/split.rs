use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::emodb::{AudioClip, EmotionLabel, N_CLASSES};
use crate::error::DatasetError;

/// Per-class (train, test) counts, indexed like [`EmotionLabel::index`].
pub type ClassTargets = [(usize, usize); N_CLASSES];

/// The published EmoDB split: train 429 / test 106.
pub const TABLE_1_TARGETS: ClassTargets = [
    (55, 14), // fear
    (50, 12), // sadness
    (37, 9),  // disgust
    (102, 25), // anger
    (65, 16), // boredom
    (64, 15), // neutral
    (56, 15), // happiness
];

/// How to carve the corpus.
#[derive(Debug, Clone)]
pub enum SplitMode {
    /// Emotion-stratified random split hitting exact per-class counts.
    Stratified(ClassTargets),
    /// Optional speaker-disjoint mode: whole speakers go to the test side
    /// until it holds at least `test_fraction` of the clips. Per-class counts
    /// are then whatever the speakers dictate.
    SpeakerDisjoint { test_fraction: f64 },
}

/// Train/test partition as indices into the corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetSplit {
    pub train: Vec<usize>,
    pub test: Vec<usize>,
    pub seed: u64,
}

impl DatasetSplit {
    /// `filename<TAB>train|test` lines, sorted by filename.
    pub fn manifest_lines(&self, corpus: &[AudioClip]) -> Vec<String> {
        let mut lines: Vec<String> = self
            .train
            .iter()
            .map(|&i| format!("{}\ttrain", corpus[i].id))
            .chain(self.test.iter().map(|&i| format!("{}\ttest", corpus[i].id)))
            .collect();
        lines.sort();
        lines
    }

    pub fn class_counts(&self, corpus: &[AudioClip]) -> [(usize, usize); N_CLASSES] {
        let mut counts = [(0, 0); N_CLASSES];
        for &i in &self.train {
            counts[corpus[i].label.index()].0 += 1;
        }
        for &i in &self.test {
            counts[corpus[i].label.index()].1 += 1;
        }
        counts
    }
}

/// Split the corpus. Stratified mode requires every class to hold exactly
/// `train + test` clips so that the split partitions the corpus.
pub fn split(
    corpus: &[AudioClip],
    mode: &SplitMode,
    seed: u64,
) -> Result<DatasetSplit, DatasetError> {
    match mode {
        SplitMode::Stratified(targets) => stratified(corpus, targets, seed),
        SplitMode::SpeakerDisjoint { test_fraction } => {
            speaker_disjoint(corpus, *test_fraction, seed)
        }
    }
}

fn stratified(
    corpus: &[AudioClip],
    targets: &ClassTargets,
    seed: u64,
) -> Result<DatasetSplit, DatasetError> {
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); N_CLASSES];
    for (i, clip) in corpus.iter().enumerate() {
        by_class[clip.label.index()].push(i);
    }

    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut train = Vec::new();
    let mut test = Vec::new();
    for (class_idx, indices) in by_class.iter_mut().enumerate() {
        let (n_train, n_test) = targets[class_idx];
        if indices.len() != n_train + n_test {
            return Err(DatasetError::InfeasibleSplit {
                class: EmotionLabel::ALL[class_idx].name(),
                needed: n_train + n_test,
                available: indices.len(),
            });
        }
        indices.shuffle(&mut rng);
        train.extend_from_slice(&indices[..n_train]);
        test.extend_from_slice(&indices[n_train..]);
    }
    train.sort_unstable();
    test.sort_unstable();
    Ok(DatasetSplit { train, test, seed })
}

fn speaker_disjoint(
    corpus: &[AudioClip],
    test_fraction: f64,
    seed: u64,
) -> Result<DatasetSplit, DatasetError> {
    let mut speakers: Vec<String> = corpus.iter().map(|c| c.speaker.clone()).collect();
    speakers.sort();
    speakers.dedup();
    speakers.shuffle(&mut ChaCha20Rng::seed_from_u64(seed));

    let want = (test_fraction * corpus.len() as f64).round() as usize;
    let mut test_speakers = Vec::new();
    let mut covered = 0;
    for speaker in speakers {
        if covered >= want {
            break;
        }
        covered += corpus.iter().filter(|c| c.speaker == speaker).count();
        test_speakers.push(speaker);
    }

    let (mut train, mut test) = (Vec::new(), Vec::new());
    for (i, clip) in corpus.iter().enumerate() {
        if test_speakers.contains(&clip.speaker) {
            test.push(i);
        } else {
            train.push(i);
        }
    }
    Ok(DatasetSplit { train, test, seed })
}
