//! trendrank: rank microblog posts by how well they describe a trend.
//!
//! The pipeline ingests a corpus of tweets, builds a word-frequency index
//! over the sample space, scores each tweet as the sum of the relative
//! frequencies of its non-stop-word tokens, and ranks the tweets
//! descending — the top entry is the post that best summarizes what the
//! trend is about. Incoming tweet batches can be folded into an existing
//! index with an exponential-decay weight so rankings track the
//! conversation as it moves.
//!
//! Modules:
//! - [`corpus`]: record parsing, hashtag extraction, the sample space and
//!   the trend-association pass.
//! - [`tokenizer`]: text → countable words (hashtags, mentions and URLs
//!   excluded).
//! - [`lexicon`]: the stop-word and common-word dictionaries.
//! - [`freq`]: the frequency index, decay updates and concentration
//!   statistics.
//! - [`scorer`]: per-tweet scores and the final ranking.
//! - [`report`]: text/JSON reports and the histogram CSV export.
//! - [`cli`]: the end-to-end pipeline behind the `trendrank` binary.

pub mod cli;
pub mod corpus;
mod error;
pub mod freq;
pub mod lexicon;
pub mod report;
pub mod scorer;
pub mod tokenizer;

pub use corpus::{
    load_trends, parse_corpus, parse_corpus_bytes, parse_corpus_jsonl, prepare_sample_space,
    SampleSpace, TrendTag, Tweet,
};
pub use error::Error;
pub use freq::{DecayConfig, FrequencyIndex, HistogramEntry};
pub use lexicon::{load_lexicon, Lexicon, LexiconKind};
pub use report::{emit_report, render_real, OutputFormat, Report};
pub use scorer::{normalize_score, rank_tweets, score_tweet, RankedList, TweetScore};
pub use tokenizer::{char_length, tokenize, Word};
