//! Turns tweet text into the word stream that gets counted and scored.
//!
//! Tokens are split on Unicode whitespace. Hashtags, mentions and URLs are
//! dropped because they carry no descriptive prose; what remains is stripped
//! of surrounding punctuation and lowercased. Internal punctuation survives
//! so that tokens like "no.1" or "we're" keep their shape.

use std::fmt;

/// A single countable word: lowercase, non-empty, never a hashtag, mention
/// or URL fragment.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(String);

impl Word {
    /// Builds a `Word` from a single token, applying the same exclusion and
    /// stripping rules as [`tokenize`]. Returns `None` when the input does
    /// not survive as exactly one word.
    pub fn new(token: &str) -> Option<Word> {
        let mut words = tokenize(token);
        if words.len() == 1 {
            Some(words.remove(0))
        } else {
            None
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Splits `text` into words.
///
/// Tokens beginning with `#` or `@` are dropped, as are tokens containing
/// `://` or starting (case-insensitively) with `www.`. Surviving tokens are
/// stripped of leading/trailing punctuation, lowercased, and dropped if
/// they end up empty. Order and duplicates are preserved.
pub fn tokenize(text: &str) -> Vec<Word> {
    text.split_whitespace().filter_map(normalize_token).collect()
}

/// Number of Unicode scalar values in the trimmed text.
pub fn char_length(text: &str) -> usize {
    text.trim().chars().count()
}

fn normalize_token(token: &str) -> Option<Word> {
    if is_excluded(token) {
        return None;
    }
    let stripped = token.trim_matches(|c: char| !c.is_alphanumeric());
    if stripped.is_empty() {
        return None;
    }
    let lowered = stripped.to_lowercase();
    // Stripping can expose a form the exclusion rules would have caught,
    // e.g. ".www.example.com" loses its leading dot; re-check before
    // emitting so no word ever looks like a URL.
    if is_excluded(&lowered) {
        return None;
    }
    Some(Word(lowered))
}

fn is_excluded(token: &str) -> bool {
    token.starts_with('#')
        || token.starts_with('@')
        || token.contains("://")
        || token
            .get(..4)
            .is_some_and(|prefix| prefix.eq_ignore_ascii_case("www."))
}
