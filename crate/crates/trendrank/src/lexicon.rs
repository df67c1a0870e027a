//! The two word dictionaries consulted while scoring: a stop-word list of
//! grammatical tool words and a list of common content words.

use std::collections::HashSet;

use crate::error::Error;
use crate::tokenizer::Word;

/// Built-in stop-word list: articles, prepositions and conjunctions.
pub const DEFAULT_FILTER: &str = include_str!("../data/filter.txt");

/// Built-in common-word list: high-frequency nouns, adjectives, adverbs,
/// verbs and their inflected forms.
pub const DEFAULT_CNFILTER: &str = include_str!("../data/cnfilter.txt");

/// Which role a lexicon plays in scoring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexiconKind {
    /// Words excluded from the score sum.
    Filter,
    /// Words counted toward the common-word tally.
    CnFilter,
}

/// An immutable set of lowercase words.
#[derive(Debug, Clone)]
pub struct Lexicon {
    words: HashSet<String>,
    kind: LexiconKind,
}

impl Lexicon {
    /// The built-in stop-word lexicon.
    pub fn default_filter() -> Lexicon {
        load_lexicon(DEFAULT_FILTER, LexiconKind::Filter)
            .expect("built-in filter lexicon is well formed")
    }

    /// The built-in common-word lexicon.
    pub fn default_cnfilter() -> Lexicon {
        load_lexicon(DEFAULT_CNFILTER, LexiconKind::CnFilter)
            .expect("built-in cnfilter lexicon is well formed")
    }

    pub fn kind(&self) -> LexiconKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// True iff the word is in this lexicon.
    pub fn contains(&self, word: &Word) -> bool {
        self.words.contains(word.as_str())
    }

    /// Raw membership test on a pre-lowercased string.
    pub fn contains_str(&self, word: &str) -> bool {
        self.words.contains(word)
    }
}

/// Parses a lexicon: one word per line, lowercased, duplicates collapse
/// silently. Blank lines and lines starting with `# ` are skipped. A line
/// whose entry contains internal whitespace is a format error.
pub fn load_lexicon(raw_text: &str, kind: LexiconKind) -> Result<Lexicon, Error> {
    let mut words = HashSet::new();
    for (idx, line) in raw_text.lines().enumerate() {
        let entry = line.trim();
        if entry.is_empty() || entry.starts_with("# ") {
            continue;
        }
        if entry.chars().any(char::is_whitespace) {
            return Err(Error::LexiconFormat {
                line: idx + 1,
                entry: entry.to_string(),
            });
        }
        words.insert(entry.to_lowercase());
    }
    Ok(Lexicon { words, kind })
}
