//! Corpus ingestion: parse tweet records from files and assemble the sample
//! space, optionally running the trend-tag association pass that up-weights
//! tweets carrying trending hashtags.

use std::collections::BTreeSet;

use serde::Deserialize;

use crate::error::Error;
use crate::tokenizer::char_length;

/// Character budget a well-formed tweet fits in; longer records are kept
/// but logged.
const TWEET_CHAR_LIMIT: usize = 140;

/// A trending hashtag, stored lowercase and without the leading `#`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrendTag(String);

impl TrendTag {
    /// Validates a tag: strips one leading `#` if present, lowercases, and
    /// rejects empty names and names containing whitespace.
    pub fn new(raw: &str) -> Result<TrendTag, Error> {
        let name = raw.strip_prefix('#').unwrap_or(raw).to_lowercase();
        if name.is_empty() {
            return Err(Error::InvalidTag {
                raw: raw.to_string(),
                reason: "empty",
            });
        }
        if name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidTag {
                raw: raw.to_string(),
                reason: "contains whitespace",
            });
        }
        Ok(TrendTag(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for TrendTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// One microblog post: its raw text, the hashtags found in it, and its
/// position in the corpus it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tweet {
    text: String,
    tags: BTreeSet<TrendTag>,
    position: usize,
}

impl Tweet {
    /// Builds a tweet, extracting its tags from `#`-prefixed tokens in the
    /// text. Fails if the text is empty after trimming.
    pub fn new(text: &str, position: usize) -> Result<Tweet, Error> {
        if text.trim().is_empty() {
            return Err(Error::EmptyTweet);
        }
        Ok(Tweet {
            tags: extract_tags(text),
            text: text.to_string(),
            position,
        })
    }

    /// Builds a tweet with an explicit tag set. Every declared tag must
    /// occur as a hashtag in the text.
    pub fn with_tags(
        text: &str,
        tags: BTreeSet<TrendTag>,
        position: usize,
    ) -> Result<Tweet, Error> {
        if text.trim().is_empty() {
            return Err(Error::EmptyTweet);
        }
        let extracted = extract_tags(text);
        for tag in &tags {
            if !extracted.contains(tag) {
                return Err(Error::TagMissing {
                    tag: tag.to_string(),
                });
            }
        }
        Ok(Tweet {
            text: text.to_string(),
            tags,
            position,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn tags(&self) -> &BTreeSet<TrendTag> {
        &self.tags
    }

    pub fn position(&self) -> usize {
        self.position
    }

    pub fn has_tag(&self, tag: &TrendTag) -> bool {
        self.tags.contains(tag)
    }

    fn reposition(&self, position: usize) -> Tweet {
        Tweet {
            text: self.text.clone(),
            tags: self.tags.clone(),
            position,
        }
    }
}

/// Hashtags in `text`: maximal non-whitespace runs starting with `#`,
/// lowercased, with the marker removed.
fn extract_tags(text: &str) -> BTreeSet<TrendTag> {
    text.split_whitespace()
        .filter(|token| token.starts_with('#'))
        .filter_map(|token| TrendTag::new(token).ok())
        .collect()
}

/// The ordered set of tweets the pipeline analyzes, together with the trend
/// context it was assembled under (if any). Tweets may appear more than
/// once: the association pass deliberately re-adds posts that carry
/// trending tags.
#[derive(Debug, Clone)]
pub struct SampleSpace {
    tweets: Vec<Tweet>,
    highest_tag: Option<TrendTag>,
    trend_tags: Vec<TrendTag>,
}

impl SampleSpace {
    /// A sample space that is just the given tweets, no trend association.
    pub fn from_tweets(tweets: Vec<Tweet>) -> SampleSpace {
        SampleSpace {
            tweets,
            highest_tag: None,
            trend_tags: Vec::new(),
        }
    }

    pub fn tweets(&self) -> &[Tweet] {
        &self.tweets
    }

    pub fn len(&self) -> usize {
        self.tweets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tweets.is_empty()
    }

    pub fn highest_tag(&self) -> Option<&TrendTag> {
        self.highest_tag.as_ref()
    }

    pub fn trend_tags(&self) -> &[TrendTag] {
        &self.trend_tags
    }
}

/// Parses a plain corpus: records separated by lines consisting solely of
/// `separator` (after trimming). Each record is trimmed and empty records
/// are dropped; positions are assigned in reading order.
pub fn parse_corpus(raw_text: &str, separator: &str) -> Result<Vec<Tweet>, Error> {
    if separator.is_empty() {
        return Err(Error::EmptySeparator);
    }
    let mut tweets = Vec::new();
    let mut segment = String::new();
    for line in raw_text.lines() {
        if line.trim() == separator {
            flush_segment(&mut segment, &mut tweets)?;
        } else {
            segment.push_str(line);
            segment.push('\n');
        }
    }
    flush_segment(&mut segment, &mut tweets)?;
    Ok(tweets)
}

fn flush_segment(segment: &mut String, tweets: &mut Vec<Tweet>) -> Result<(), Error> {
    let text = segment.trim();
    if !text.is_empty() {
        let tweet = Tweet::new(text, tweets.len())?;
        warn_if_overlong(&tweet);
        tweets.push(tweet);
    }
    segment.clear();
    Ok(())
}

/// Like [`parse_corpus`], but decodes the bytes first and reports the byte
/// offset of any invalid UTF-8.
pub fn parse_corpus_bytes(raw: &[u8], separator: &str) -> Result<Vec<Tweet>, Error> {
    let text = std::str::from_utf8(raw).map_err(|e| Error::InvalidUtf8 {
        offset: e.valid_up_to(),
    })?;
    parse_corpus(text, separator)
}

#[derive(Deserialize)]
struct JsonRecord {
    text: String,
    #[serde(default)]
    tags: Option<Vec<String>>,
}

/// Parses the structured corpus format: one JSON record per line with a
/// `text` field and an optional `tags` list. When `tags` is present it is
/// taken as the tweet's tag set and validated against the text; when
/// absent, tags are extracted from the text.
pub fn parse_corpus_jsonl(raw_text: &str) -> Result<Vec<Tweet>, Error> {
    let mut tweets = Vec::new();
    for (idx, line) in raw_text.lines().enumerate() {
        let line_number = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let record: JsonRecord =
            serde_json::from_str(line).map_err(|e| Error::CorpusFormat {
                line: line_number,
                message: e.to_string(),
            })?;
        let text = record.text.trim();
        let tweet = match record.tags {
            None => Tweet::new(text, tweets.len()),
            Some(declared) => {
                let mut tags = BTreeSet::new();
                for raw_tag in &declared {
                    tags.insert(TrendTag::new(raw_tag).map_err(|e| Error::CorpusFormat {
                        line: line_number,
                        message: e.to_string(),
                    })?);
                }
                Tweet::with_tags(text, tags, tweets.len())
            }
        }
        .map_err(|e| Error::CorpusFormat {
            line: line_number,
            message: e.to_string(),
        })?;
        warn_if_overlong(&tweet);
        tweets.push(tweet);
    }
    Ok(tweets)
}

fn warn_if_overlong(tweet: &Tweet) {
    let chars = char_length(tweet.text());
    if chars > TWEET_CHAR_LIMIT {
        log::warn!(
            "tweet at position {} exceeds {} characters ({} chars); keeping it",
            tweet.position(),
            TWEET_CHAR_LIMIT,
            chars
        );
    }
}

/// Runs the trend-association pass: every retrieved tweet carrying
/// `highest` is appended once, then for each tag in `trends` every tweet
/// carrying that tag is appended again. Multi-trend tweets therefore appear
/// multiple times, which up-weights them in the frequency index. Appended
/// copies receive fresh sequential positions.
///
/// `trends` is expected to be duplicate-free (see [`load_trends`]).
pub fn prepare_sample_space(
    retrieved: &[Tweet],
    highest: &TrendTag,
    trends: &[TrendTag],
) -> SampleSpace {
    let mut selected: Vec<&Tweet> = Vec::new();
    for tweet in retrieved {
        if tweet.has_tag(highest) {
            selected.push(tweet);
        }
    }
    for tag in trends {
        for tweet in retrieved {
            if tweet.has_tag(tag) {
                selected.push(tweet);
            }
        }
    }
    let tweets = selected
        .into_iter()
        .enumerate()
        .map(|(position, tweet)| tweet.reposition(position))
        .collect();
    SampleSpace {
        tweets,
        highest_tag: Some(highest.clone()),
        trend_tags: trends.to_vec(),
    }
}

/// Parses a trends file: one tag per non-empty, non-comment line, `#`
/// prefix optional, lowercased. The first tag is the highest-trending one.
/// Duplicates and an empty list are format errors.
pub fn load_trends(raw_text: &str) -> Result<Vec<TrendTag>, Error> {
    let mut tags: Vec<TrendTag> = Vec::new();
    let mut seen = BTreeSet::new();
    for line in raw_text.lines() {
        let entry = line.trim();
        if entry.is_empty() || entry.starts_with("# ") {
            continue;
        }
        let tag = TrendTag::new(entry)?;
        if !seen.insert(tag.clone()) {
            return Err(Error::DuplicateTrend(tag.to_string()));
        }
        tags.push(tag);
    }
    if tags.is_empty() {
        return Err(Error::NoTrends);
    }
    Ok(tags)
}
