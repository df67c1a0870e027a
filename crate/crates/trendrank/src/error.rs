use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by corpus parsing, lexicon loading, indexing and the CLI
/// pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Input bytes are not valid UTF-8.
    #[error("invalid UTF-8 at byte offset {offset}")]
    InvalidUtf8 { offset: usize },

    /// Reading or writing a file failed.
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Wraps an error with the file it came from.
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    /// A corpus record could not be parsed.
    #[error("corpus line {line}: {message}")]
    CorpusFormat { line: usize, message: String },

    /// Tweet text is empty after trimming.
    #[error("tweet text is empty")]
    EmptyTweet,

    /// A declared tag does not occur as a hashtag in the tweet text.
    #[error("tag '{tag}' does not appear as a hashtag in the tweet text")]
    TagMissing { tag: String },

    /// A trend tag failed validation.
    #[error("invalid trend tag '{raw}': {reason}")]
    InvalidTag { raw: String, reason: &'static str },

    /// The trends file lists the same tag twice.
    #[error("duplicate trend tag '{0}'")]
    DuplicateTrend(String),

    /// The trends file contains no tags.
    #[error("trends file contains no tags")]
    NoTrends,

    /// A lexicon entry contains internal whitespace.
    #[error("lexicon line {line}: entry '{entry}' contains whitespace")]
    LexiconFormat { line: usize, entry: String },

    /// The record separator must be a non-empty string.
    #[error("record separator must not be empty")]
    EmptySeparator,

    /// An operation that needs a populated index was given an empty one.
    #[error("frequency index is empty")]
    EmptyIndex,

    /// Ranking over an empty sample space.
    #[error("empty sample space")]
    EmptySampleSpace,

    /// Decay parameters out of range.
    #[error(
        "decay parameters require 0 < t <= n and f >= 1 \
         (got t={target_residual}, n={baseline}, f={batches})"
    )]
    InvalidDecayParams {
        target_residual: f64,
        baseline: f64,
        batches: u32,
    },

    /// Learning index out of the (0, 1] range.
    #[error("learning index must lie in (0, 1], got {0}")]
    InvalidLearningIndex(f64),

    /// top-k queries need k >= 1.
    #[error("k must be at least 1")]
    ZeroK,
}

impl Error {
    /// Process exit status for the CLI: 3 for an empty effective sample
    /// space, 2 for every input, format or I/O problem.
    pub fn exit_status(&self) -> i32 {
        match self {
            Error::EmptySampleSpace | Error::EmptyIndex => 3,
            Error::File { source, .. } => source.exit_status(),
            _ => 2,
        }
    }
}
