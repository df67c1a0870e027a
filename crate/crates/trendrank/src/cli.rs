//! End-to-end pipeline behind the command line: read the corpus, assemble
//! the sample space, build the index, optionally fold in an update batch
//! with decay, rank, and emit the report.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::corpus::{self, SampleSpace, Tweet};
use crate::error::Error;
use crate::freq::{DecayConfig, FrequencyIndex};
use crate::lexicon::{load_lexicon, Lexicon, LexiconKind, DEFAULT_CNFILTER, DEFAULT_FILTER};
use crate::report::{emit_report, write_histogram_csv, OutputFormat, Report};
use crate::scorer::rank_tweets;

/// On-disk layout of a corpus file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    /// Records separated by a separator line.
    Plain,
    /// One JSON record per line with `text` and optional `tags` fields.
    Jsonl,
}

/// Decay parameters plus the batch to fold in.
#[derive(Debug, Clone)]
pub struct DecaySpec {
    pub target_residual: f64,
    pub baseline: f64,
    pub batches: u32,
    pub update_path: PathBuf,
}

/// Everything one `analyze` invocation needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub corpus_path: PathBuf,
    pub corpus_format: CorpusFormat,
    pub separator: String,
    pub trends_path: Option<PathBuf>,
    /// Stop-word lexicon path; the built-in list when absent.
    pub filter_path: Option<PathBuf>,
    /// Common-word lexicon path; the built-in list when absent.
    pub cnfilter_path: Option<PathBuf>,
    pub top_k: usize,
    pub use_normalized: bool,
    pub decay: Option<DecaySpec>,
    pub output_format: OutputFormat,
    pub histogram_csv_path: Option<PathBuf>,
}

impl RunConfig {
    /// A config with defaults matching the CLI flags: plain format, `%%`
    /// separator, built-in lexicons, top 10, raw-score ranking, text
    /// output.
    pub fn new(corpus_path: impl Into<PathBuf>) -> RunConfig {
        RunConfig {
            corpus_path: corpus_path.into(),
            corpus_format: CorpusFormat::Plain,
            separator: "%%".to_string(),
            trends_path: None,
            filter_path: None,
            cnfilter_path: None,
            top_k: 10,
            use_normalized: false,
            decay: None,
            output_format: OutputFormat::Text,
            histogram_csv_path: None,
        }
    }
}

/// Runs the full pipeline and writes the report to `out`. Errors carry the
/// offending path where one exists; the caller maps them to exit statuses.
pub fn run_analyze(config: &RunConfig, out: &mut dyn io::Write) -> Result<(), Error> {
    let parsed = read_corpus(&config.corpus_path, config)?;

    let ss = match &config.trends_path {
        Some(path) => {
            let raw = read_utf8(path)?;
            let trends = corpus::load_trends(&raw).map_err(|e| at_path(path, e))?;
            let highest = trends[0].clone();
            corpus::prepare_sample_space(&parsed, &highest, &trends)
        }
        None => SampleSpace::from_tweets(parsed),
    };
    if ss.is_empty() {
        return Err(Error::EmptySampleSpace);
    }

    let filter_lex = load_lexicon_from(config.filter_path.as_deref(), LexiconKind::Filter)?;
    let cn_lex = load_lexicon_from(config.cnfilter_path.as_deref(), LexiconKind::CnFilter)?;

    let mut index = FrequencyIndex::build(&ss);
    if let Some(decay) = &config.decay {
        let decay_config =
            DecayConfig::new(decay.target_residual, decay.baseline, decay.batches)?;
        let batch = read_corpus(&decay.update_path, config)?;
        index = index.decay_update(&batch, decay_config.learning_index())?;
    }

    let ranked = rank_tweets(&ss, &index, &filter_lex, &cn_lex, config.use_normalized)?;
    let report = Report::build(&ss, &index, &ranked, config.top_k);
    out.write_all(emit_report(&report, config.output_format).as_bytes())
        .map_err(|source| Error::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })?;

    if let Some(path) = &config.histogram_csv_path {
        write_histogram_csv(&index, path)?;
    }
    Ok(())
}

fn read_corpus(path: &Path, config: &RunConfig) -> Result<Vec<Tweet>, Error> {
    let raw = read_utf8(path)?;
    let parsed = match config.corpus_format {
        CorpusFormat::Plain => corpus::parse_corpus(&raw, &config.separator),
        CorpusFormat::Jsonl => corpus::parse_corpus_jsonl(&raw),
    };
    parsed.map_err(|e| at_path(path, e))
}

fn read_utf8(path: &Path) -> Result<String, Error> {
    let bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    String::from_utf8(bytes).map_err(|e| {
        at_path(
            path,
            Error::InvalidUtf8 {
                offset: e.utf8_error().valid_up_to(),
            },
        )
    })
}

fn at_path(path: &Path, source: Error) -> Error {
    Error::File {
        path: path.to_path_buf(),
        source: Box::new(source),
    }
}

fn load_lexicon_from(path: Option<&Path>, kind: LexiconKind) -> Result<Lexicon, Error> {
    match path {
        Some(path) => {
            let raw = read_utf8(path)?;
            load_lexicon(&raw, kind).map_err(|e| at_path(path, e))
        }
        None => {
            let builtin = match kind {
                LexiconKind::Filter => DEFAULT_FILTER,
                LexiconKind::CnFilter => DEFAULT_CNFILTER,
            };
            load_lexicon(builtin, kind)
        }
    }
}
