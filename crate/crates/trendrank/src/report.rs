//! Report assembly and rendering: the human-readable text report, the JSON
//! document, and the frequency-histogram CSV export. All renderings are
//! deterministic; real numbers are written with up to nine fractional
//! digits, trailing zeros trimmed.

use std::fs::File;
use std::io;
use std::path::Path;

use serde::Deserialize;

use crate::corpus::SampleSpace;
use crate::error::Error;
use crate::freq::FrequencyIndex;
use crate::scorer::RankedList;

/// How the report is written to standard output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// The analysis summary: corpus-level statistics, the heaviest words, and
/// the ranked tweets.
#[derive(Debug, Clone, Deserialize)]
pub struct Report {
    pub trend_name: String,
    pub tweet_count: usize,
    pub distinct_words: usize,
    pub total_mass: f64,
    pub top_words: Vec<TopWord>,
    pub ranked_tweets: Vec<RankedTweetRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct TopWord {
    pub word: String,
    pub mass: f64,
    pub relative_frequency: f64,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RankedTweetRow {
    pub rank: usize,
    pub raw_score: f64,
    pub normalized_score: f64,
    pub all_common: bool,
    pub text: String,
}

impl Report {
    /// Assembles the report from the analysis outputs. `top_k` bounds both
    /// the word table and the ranked-tweet list.
    pub fn build(
        ss: &SampleSpace,
        index: &FrequencyIndex,
        ranked: &RankedList,
        top_k: usize,
    ) -> Report {
        let trend_name = ss
            .highest_tag()
            .map(|tag| format!("#{tag}"))
            .unwrap_or_default();
        let top_words = index
            .histogram()
            .into_iter()
            .take(top_k)
            .map(|entry| TopWord {
                word: entry.word.to_string(),
                mass: entry.mass,
                relative_frequency: entry.mass / index.total_mass(),
            })
            .collect();
        let ranked_tweets = ranked
            .entries()
            .iter()
            .take(top_k)
            .map(|entry| RankedTweetRow {
                rank: entry.rank,
                raw_score: entry.score.raw_score,
                normalized_score: entry.score.normalized_score,
                all_common: entry.score.all_common,
                text: entry.tweet.text().to_string(),
            })
            .collect();
        Report {
            trend_name,
            tweet_count: ss.len(),
            distinct_words: index.distinct_words(),
            total_mass: index.total_mass(),
            top_words,
            ranked_tweets,
        }
    }
}

/// Renders a real number with up to nine fractional digits, trimming
/// trailing zeros (and a bare trailing point).
pub fn render_real(value: f64) -> String {
    let rendered = format!("{value:.9}");
    rendered
        .trim_end_matches('0')
        .trim_end_matches('.')
        .to_string()
}

/// Renders the report in the requested format. The returned string ends
/// with a newline.
pub fn emit_report(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => emit_text(report),
        OutputFormat::Json => emit_json(report),
    }
}

fn emit_text(report: &Report) -> String {
    let mut out = String::new();
    let trend = if report.trend_name.is_empty() {
        "(none)"
    } else {
        &report.trend_name
    };
    out.push_str(&format!("Highest Trending : {trend}\n"));
    out.push_str(&format!("Tweets : {}\n", report.tweet_count));
    out.push_str(&format!("Distinct Words : {}\n", report.distinct_words));
    out.push_str(&format!("Total Words : {}\n", render_real(report.total_mass)));
    out.push('\n');

    if report.top_words.is_empty() {
        out.push_str("no words indexed\n");
    } else {
        out.push_str("Word  Frequency\n");
        for word in &report.top_words {
            out.push_str(&format!("{}  {}\n", word.word, render_real(word.mass)));
        }
    }

    if let Some(best) = report.ranked_tweets.first() {
        out.push('\n');
        out.push_str("Most Eligible Tweet :\n");
        out.push_str(&best.text);
        out.push('\n');

        out.push('\n');
        out.push_str("Rank  Score  Normalized  AllCommon  Tweet\n");
        for row in &report.ranked_tweets {
            out.push_str(&format!(
                "{}  {}  {}  {}  {}\n",
                row.rank,
                render_real(row.raw_score),
                render_real(row.normalized_score),
                row.all_common,
                row.text.replace('\n', " "),
            ));
        }
    }
    out
}

fn json_string(value: &str) -> String {
    serde_json::to_string(value).expect("strings always serialize")
}

fn emit_json(report: &Report) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!(
        "  \"trend_name\": {},\n",
        json_string(&report.trend_name)
    ));
    out.push_str(&format!("  \"tweet_count\": {},\n", report.tweet_count));
    out.push_str(&format!(
        "  \"distinct_words\": {},\n",
        report.distinct_words
    ));
    out.push_str(&format!(
        "  \"total_mass\": {},\n",
        render_real(report.total_mass)
    ));

    if report.top_words.is_empty() {
        out.push_str("  \"top_words\": [],\n");
    } else {
        out.push_str("  \"top_words\": [\n");
        for (i, word) in report.top_words.iter().enumerate() {
            let separator = if i + 1 == report.top_words.len() { "" } else { "," };
            out.push_str(&format!(
                "    {{\"word\": {}, \"mass\": {}, \"relative_frequency\": {}}}{}\n",
                json_string(&word.word),
                render_real(word.mass),
                render_real(word.relative_frequency),
                separator,
            ));
        }
        out.push_str("  ],\n");
    }

    if report.ranked_tweets.is_empty() {
        out.push_str("  \"ranked_tweets\": []\n");
    } else {
        out.push_str("  \"ranked_tweets\": [\n");
        for (i, row) in report.ranked_tweets.iter().enumerate() {
            let separator = if i + 1 == report.ranked_tweets.len() { "" } else { "," };
            out.push_str(&format!(
                "    {{\"rank\": {}, \"raw_score\": {}, \"normalized_score\": {}, \
                 \"all_common\": {}, \"text\": {}}}{}\n",
                row.rank,
                render_real(row.raw_score),
                render_real(row.normalized_score),
                row.all_common,
                json_string(&row.text),
                separator,
            ));
        }
        out.push_str("  ]\n");
    }
    out.push_str("}\n");
    out
}

/// Writes the frequency histogram as CSV: `rank,word,mass,cumulative_fraction`,
/// one row per distinct word in rank order.
pub fn emit_histogram_csv<W: io::Write>(index: &FrequencyIndex, writer: W) -> csv::Result<()> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    csv_writer.write_record(["rank", "word", "mass", "cumulative_fraction"])?;
    for entry in index.histogram() {
        csv_writer.write_record([
            entry.rank.to_string(),
            entry.word.to_string(),
            render_real(entry.mass),
            render_real(entry.cumulative_fraction),
        ])?;
    }
    csv_writer.flush()?;
    Ok(())
}

/// [`emit_histogram_csv`] to a file path.
pub fn write_histogram_csv(index: &FrequencyIndex, path: &Path) -> Result<(), Error> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    emit_histogram_csv(index, file).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source: io::Error::other(source),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Tweet;
    use crate::lexicon::{load_lexicon, LexiconKind};
    use crate::scorer::rank_tweets;

    fn corpus_a_report(top_k: usize) -> (Report, FrequencyIndex) {
        let tweets = ["the match was great", "great match today", "great goals"]
            .iter()
            .enumerate()
            .map(|(i, t)| Tweet::new(t, i).unwrap())
            .collect();
        let ss = SampleSpace::from_tweets(tweets);
        let index = FrequencyIndex::build(&ss);
        let filter = load_lexicon("the\nwas", LexiconKind::Filter).unwrap();
        let cn = load_lexicon("", LexiconKind::CnFilter).unwrap();
        let ranked = rank_tweets(&ss, &index, &filter, &cn, false).unwrap();
        (Report::build(&ss, &index, &ranked, top_k), index)
    }

    #[test]
    fn renders_reals_with_trimmed_digits() {
        assert_eq!(render_real(3.0), "3");
        assert_eq!(render_real(0.5), "0.5");
        assert_eq!(render_real(1.0 / 3.0), "0.333333333");
        assert_eq!(render_real(5.0 / 9.0), "0.555555556");
        assert_eq!(render_real(0.0), "0");
        assert_eq!(render_real(1.0), "1");
    }

    #[test]
    fn text_report_mirrors_the_expected_layout() {
        let (report, _) = corpus_a_report(10);
        let text = emit_report(&report, OutputFormat::Text);
        assert!(text.starts_with("Highest Trending : (none)\n"));
        let lines: Vec<&str> = text.lines().collect();
        let header = lines.iter().position(|l| *l == "Word  Frequency").unwrap();
        assert_eq!(lines[header + 1], "great  3");
        assert_eq!(lines[header + 2], "match  2");
        assert!(text.contains("Most Eligible Tweet :\ngreat match today\n"));
        assert!(text.contains("Tweets : 3\n"));
        assert!(text.contains("Distinct Words : 6\n"));
        assert!(text.contains("Total Words : 9\n"));
    }

    #[test]
    fn empty_word_table_prints_a_note() {
        let report = Report {
            trend_name: String::new(),
            tweet_count: 0,
            distinct_words: 0,
            total_mass: 0.0,
            top_words: Vec::new(),
            ranked_tweets: Vec::new(),
        };
        let text = emit_report(&report, OutputFormat::Text);
        assert!(text.contains("no words indexed"));
        assert!(!text.contains("Word  Frequency"));
    }

    #[test]
    fn top_k_bounds_both_sections() {
        let (report, _) = corpus_a_report(2);
        assert_eq!(report.top_words.len(), 2);
        assert_eq!(report.ranked_tweets.len(), 2);
    }

    #[test]
    fn json_report_reparses_to_the_same_values() {
        let (report, _) = corpus_a_report(10);
        let json = emit_report(&report, OutputFormat::Json);
        let parsed: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.trend_name, report.trend_name);
        assert_eq!(parsed.tweet_count, report.tweet_count);
        assert_eq!(parsed.distinct_words, report.distinct_words);
        assert_eq!(parsed.total_mass, report.total_mass);
        assert_eq!(parsed.top_words.len(), report.top_words.len());
        assert_eq!(parsed.ranked_tweets.len(), report.ranked_tweets.len());
        for (a, b) in parsed.top_words.iter().zip(&report.top_words) {
            assert_eq!(a.word, b.word);
            assert_eq!(a.mass, b.mass);
            // Rendered at nine fractional digits.
            assert!((a.relative_frequency - b.relative_frequency).abs() < 1e-9);
        }
        for (a, b) in parsed.ranked_tweets.iter().zip(&report.ranked_tweets) {
            assert_eq!(a.rank, b.rank);
            assert_eq!(a.text, b.text);
            assert_eq!(a.all_common, b.all_common);
            assert!((a.raw_score - b.raw_score).abs() < 1e-9);
            assert!((a.normalized_score - b.normalized_score).abs() < 1e-9);
        }
    }

    #[test]
    fn json_escapes_special_characters_in_text() {
        let report = Report {
            trend_name: "#quote\"tag".to_string(),
            tweet_count: 1,
            distinct_words: 1,
            total_mass: 1.0,
            top_words: Vec::new(),
            ranked_tweets: vec![RankedTweetRow {
                rank: 1,
                raw_score: 1.0,
                normalized_score: 0.1,
                all_common: false,
                text: "line\nbreak \"quoted\"".to_string(),
            }],
        };
        let json = emit_report(&report, OutputFormat::Json);
        let parsed: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.ranked_tweets[0].text, "line\nbreak \"quoted\"");
        assert_eq!(parsed.trend_name, "#quote\"tag");
    }

    #[test]
    fn histogram_csv_layout() {
        let (_, index) = corpus_a_report(10);
        let mut buffer = Vec::new();
        emit_histogram_csv(&index, &mut buffer).unwrap();
        let csv_text = String::from_utf8(buffer).unwrap();
        let lines: Vec<&str> = csv_text.lines().collect();
        assert_eq!(lines[0], "rank,word,mass,cumulative_fraction");
        assert_eq!(lines[1], "1,great,3,0.333333333");
        assert_eq!(lines.len(), 7);
        assert!(lines[6].ends_with(",1"));
    }

    #[test]
    fn empty_index_csv_is_header_only() {
        let index = FrequencyIndex::default();
        let mut buffer = Vec::new();
        emit_histogram_csv(&index, &mut buffer).unwrap();
        assert_eq!(
            String::from_utf8(buffer).unwrap(),
            "rank,word,mass,cumulative_fraction\n"
        );
    }
}
