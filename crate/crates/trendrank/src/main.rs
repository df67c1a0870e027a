use std::io::{self, Write};
use std::path::PathBuf;
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use env_logger::Env;

use trendrank::cli::{CorpusFormat, DecaySpec, RunConfig};
use trendrank::report::OutputFormat;

/// Rank microblog posts by how well they describe a trend.
#[derive(Parser)]
#[command(name = "trendrank", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a word-frequency index over a corpus and rank its tweets.
    Analyze(AnalyzeArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Corpus file to analyze.
    #[arg(long)]
    corpus: PathBuf,

    /// Record separator line for plain corpora.
    #[arg(long, default_value = "%%")]
    separator: String,

    /// Corpus file layout.
    #[arg(long, value_enum, default_value_t = CorpusFormatArg::Plain)]
    corpus_format: CorpusFormatArg,

    /// Trends file: one hashtag per line, highest-trending first.
    #[arg(long)]
    trends: Option<PathBuf>,

    /// Stop-word lexicon (defaults to the built-in list).
    #[arg(long)]
    filter: Option<PathBuf>,

    /// Common-word lexicon (defaults to the built-in list).
    #[arg(long)]
    cnfilter: Option<PathBuf>,

    /// How many words and tweets to include in the report.
    #[arg(long = "top", default_value_t = 10, value_parser = parse_top_k)]
    top_k: usize,

    /// Rank by the length-normalized score instead of the raw score.
    #[arg(long)]
    normalize_length: bool,

    /// Decay: residual contribution of the old data after all batches.
    #[arg(long = "decay-t", requires_all = ["decay_n", "decay_f", "update"])]
    decay_t: Option<f64>,

    /// Decay: current contribution of the old data.
    #[arg(long = "decay-n", requires_all = ["decay_t", "decay_f", "update"])]
    decay_n: Option<f64>,

    /// Decay: number of incoming batches over which to reach the residual.
    #[arg(long = "decay-f", requires_all = ["decay_t", "decay_n", "update"])]
    decay_f: Option<u32>,

    /// Update corpus folded into the index with decay applied.
    #[arg(long, requires_all = ["decay_t", "decay_n", "decay_f"])]
    update: Option<PathBuf>,

    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Write the word-frequency histogram to this CSV file.
    #[arg(long)]
    histogram_csv: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CorpusFormatArg {
    Plain,
    Jsonl,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn parse_top_k(raw: &str) -> Result<usize, String> {
    let value: usize = raw.parse().map_err(|e| format!("{e}"))?;
    if value == 0 {
        return Err("must be at least 1".to_string());
    }
    Ok(value)
}

impl AnalyzeArgs {
    fn into_config(self) -> RunConfig {
        let decay = match (self.decay_t, self.decay_n, self.decay_f, self.update) {
            (Some(target_residual), Some(baseline), Some(batches), Some(update_path)) => {
                Some(DecaySpec {
                    target_residual,
                    baseline,
                    batches,
                    update_path,
                })
            }
            _ => None,
        };
        RunConfig {
            corpus_path: self.corpus,
            corpus_format: match self.corpus_format {
                CorpusFormatArg::Plain => CorpusFormat::Plain,
                CorpusFormatArg::Jsonl => CorpusFormat::Jsonl,
            },
            separator: self.separator,
            trends_path: self.trends,
            filter_path: self.filter,
            cnfilter_path: self.cnfilter,
            top_k: self.top_k,
            use_normalized: self.normalize_length,
            decay,
            output_format: match self.format {
                FormatArg::Text => OutputFormat::Text,
                FormatArg::Json => OutputFormat::Json,
            },
            histogram_csv_path: self.histogram_csv,
        }
    }
}

fn main() {
    env_logger::Builder::from_env(Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze(args) => {
            let config = args.into_config();
            let stdout = io::stdout();
            let mut out = stdout.lock();
            if let Err(err) = trendrank::cli::run_analyze(&config, &mut out) {
                let _ = out.flush();
                eprintln!("error: {err}");
                process::exit(err.exit_status());
            }
        }
    }
}
