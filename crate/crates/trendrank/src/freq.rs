//! The word-frequency index over a sample space, its exponential-decay
//! update for incoming tweet batches, and the concentration statistics
//! derived from it.

use std::collections::HashMap;

use crate::corpus::{SampleSpace, Tweet};
use crate::error::Error;
use crate::tokenizer::{tokenize, Word};

/// Masses smaller than this after a decay update are dropped to bound
/// memory over long update sequences.
const PRUNE_EPSILON: f64 = 1e-9;

/// Word → mass mapping plus the total token mass. Masses are exact integer
/// counts until the first decay update, fractional afterwards.
#[derive(Debug, Clone, Default)]
pub struct FrequencyIndex {
    masses: HashMap<Word, f64>,
    total_mass: f64,
}

/// One row of the mass-ranked frequency table.
#[derive(Debug, Clone, PartialEq)]
pub struct HistogramEntry {
    pub rank: usize,
    pub word: Word,
    pub mass: f64,
    pub cumulative_fraction: f64,
}

impl FrequencyIndex {
    /// Counts every token of every tweet in the sample space. Tweets that
    /// appear several times are counted each time; stop words are counted
    /// like any other word (filtering happens at scoring, not here).
    pub fn build(ss: &SampleSpace) -> FrequencyIndex {
        let mut index = FrequencyIndex::default();
        for tweet in ss.tweets() {
            for word in tokenize(tweet.text()) {
                *index.masses.entry(word).or_insert(0.0) += 1.0;
                index.total_mass += 1.0;
            }
        }
        index
    }

    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    pub fn distinct_words(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    /// Mass of `word`, 0 when absent.
    pub fn mass(&self, word: &Word) -> f64 {
        self.masses.get(word).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, f64)> {
        self.masses.iter().map(|(w, m)| (w, *m))
    }

    /// Share of the total mass held by `word`; 0 for absent words.
    pub fn relative_frequency(&self, word: &Word) -> Result<f64, Error> {
        if self.total_mass <= 0.0 {
            return Err(Error::EmptyIndex);
        }
        Ok(self.mass(word) / self.total_mass)
    }

    /// Applies one decay step and folds in a new batch: every existing mass
    /// (and the total) is scaled by `learning_index`, then each token of
    /// the batch adds 1 to its word and to the total. Words absent from the
    /// batch decay but are kept until their mass drops below the pruning
    /// threshold.
    pub fn decay_update(
        &self,
        new_batch: &[Tweet],
        learning_index: f64,
    ) -> Result<FrequencyIndex, Error> {
        if !(learning_index > 0.0 && learning_index <= 1.0) {
            return Err(Error::InvalidLearningIndex(learning_index));
        }
        let mut masses: HashMap<Word, f64> = self
            .masses
            .iter()
            .map(|(word, mass)| (word.clone(), mass * learning_index))
            .collect();
        let mut batch_tokens = 0u64;
        let mut batch_counts: HashMap<Word, u64> = HashMap::new();
        for tweet in new_batch {
            for word in tokenize(tweet.text()) {
                *batch_counts.entry(word).or_insert(0) += 1;
                batch_tokens += 1;
            }
        }
        for (word, count) in batch_counts {
            *masses.entry(word).or_insert(0.0) += count as f64;
        }
        masses.retain(|_, mass| *mass >= PRUNE_EPSILON);
        Ok(FrequencyIndex {
            masses,
            total_mass: self.total_mass * learning_index + batch_tokens as f64,
        })
    }

    /// Fraction of the total mass covered by the `k` heaviest words (ties
    /// broken by word, ascending). Saturates at 1 when `k` exceeds the
    /// number of distinct words.
    pub fn top_k_contribution(&self, k: usize) -> Result<f64, Error> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if self.total_mass <= 0.0 {
            return Err(Error::EmptyIndex);
        }
        let ranked = self.ranked_masses();
        let top: f64 = ranked.iter().take(k).map(|(_, mass)| mass).sum();
        Ok(top / self.total_mass)
    }

    /// The full frequency table sorted by mass descending (ties by word
    /// ascending), with 1-based ranks and a running cumulative fraction.
    pub fn histogram(&self) -> Vec<HistogramEntry> {
        let mut running = 0.0;
        self.ranked_masses()
            .into_iter()
            .enumerate()
            .map(|(i, (word, mass))| {
                running += mass;
                HistogramEntry {
                    rank: i + 1,
                    word: word.clone(),
                    mass,
                    cumulative_fraction: running / self.total_mass,
                }
            })
            .collect()
    }

    fn ranked_masses(&self) -> Vec<(&Word, f64)> {
        let mut entries: Vec<(&Word, f64)> =
            self.masses.iter().map(|(w, m)| (w, *m)).collect();
        entries.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        entries
    }
}

/// The decay parameters and the learning index derived from them: after `f`
/// batches, old data's contribution shrinks from `n` to `t`, so each batch
/// scales it by (t/n)^(1/f).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayConfig {
    target_residual: f64,
    baseline: f64,
    batches: u32,
    learning_index: f64,
}

impl DecayConfig {
    /// Validates 0 < t <= n and f >= 1 and computes the learning index.
    pub fn new(target_residual: f64, baseline: f64, batches: u32) -> Result<DecayConfig, Error> {
        // NaN parameters fall through the comparisons and are rejected too.
        if target_residual.is_nan()
            || baseline.is_nan()
            || target_residual <= 0.0
            || target_residual > baseline
            || batches < 1
        {
            return Err(Error::InvalidDecayParams {
                target_residual,
                baseline,
                batches,
            });
        }
        let learning_index = (target_residual / baseline).powf(1.0 / f64::from(batches));
        Ok(DecayConfig {
            target_residual,
            baseline,
            batches,
            learning_index,
        })
    }

    pub fn target_residual(&self) -> f64 {
        self.target_residual
    }

    pub fn baseline(&self) -> f64 {
        self.baseline
    }

    pub fn batches(&self) -> u32 {
        self.batches
    }

    pub fn learning_index(&self) -> f64 {
        self.learning_index
    }
}
