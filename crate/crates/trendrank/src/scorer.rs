//! Per-tweet scoring and the final ranking. A tweet's raw score is the sum
//! of the relative frequencies of its non-stop-word tokens; the normalized
//! variant additionally rewards tweets that use more of the character
//! budget.

use crate::corpus::{SampleSpace, Tweet};
use crate::error::Error;
use crate::freq::FrequencyIndex;
use crate::lexicon::Lexicon;
use crate::tokenizer::{char_length, tokenize};

/// The character budget used for length normalization.
pub const CHAR_BUDGET: usize = 140;

/// Everything computed about one tweet during scoring.
#[derive(Debug, Clone, PartialEq)]
pub struct TweetScore {
    /// Position of the scored tweet in its sample space.
    pub tweet_position: usize,
    /// Sum of relative frequencies over non-stop-word tokens.
    pub raw_score: f64,
    /// How many tokens are common words.
    pub cn_count: usize,
    /// True when every token is a common word (vacuously true for a tweet
    /// with no countable tokens).
    pub all_common: bool,
    /// Raw score scaled by the used fraction of the character budget.
    pub normalized_score: f64,
    pub token_count: usize,
    pub char_count: usize,
}

/// The scored sample space in rank order.
#[derive(Debug, Clone)]
pub struct RankedList {
    entries: Vec<RankedEntry>,
}

#[derive(Debug, Clone)]
pub struct RankedEntry {
    /// 1-based rank; rank 1 is the most eligible tweet.
    pub rank: usize,
    pub score: TweetScore,
    pub tweet: Tweet,
}

impl RankedList {
    pub fn entries(&self) -> &[RankedEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Scores one tweet against the index. Stop words contribute nothing to the
/// raw score but still count toward `token_count`; words absent from the
/// index contribute zero.
pub fn score_tweet(
    tweet: &Tweet,
    index: &FrequencyIndex,
    filter_lex: &Lexicon,
    cn_lex: &Lexicon,
) -> Result<TweetScore, Error> {
    if index.total_mass() <= 0.0 {
        return Err(Error::EmptyIndex);
    }
    let tokens = tokenize(tweet.text());
    let mut raw_score = 0.0;
    let mut cn_count = 0;
    for token in &tokens {
        if !filter_lex.contains(token) {
            raw_score += index.mass(token) / index.total_mass();
        }
        if cn_lex.contains(token) {
            cn_count += 1;
        }
    }
    let token_count = tokens.len();
    let char_count = char_length(tweet.text());
    Ok(TweetScore {
        tweet_position: tweet.position(),
        raw_score,
        cn_count,
        all_common: cn_count == token_count,
        normalized_score: normalize_score(raw_score, char_count),
        token_count,
        char_count,
    })
}

/// Scales a raw score by the used fraction of the character budget,
/// clamping the character count at the budget so longer records never score
/// above their raw score.
pub fn normalize_score(raw_score: f64, char_count: usize) -> f64 {
    let used = char_count.min(CHAR_BUDGET) as f64;
    raw_score * (used / CHAR_BUDGET as f64)
}

/// Scores every tweet in the sample space and sorts them by the chosen key,
/// descending, with ties broken by ascending corpus position. Ranks run
/// 1..=N with no gaps.
pub fn rank_tweets(
    ss: &SampleSpace,
    index: &FrequencyIndex,
    filter_lex: &Lexicon,
    cn_lex: &Lexicon,
    use_normalized: bool,
) -> Result<RankedList, Error> {
    if ss.is_empty() {
        return Err(Error::EmptySampleSpace);
    }
    let mut scored: Vec<(TweetScore, Tweet)> = ss
        .tweets()
        .iter()
        .map(|tweet| {
            score_tweet(tweet, index, filter_lex, cn_lex).map(|score| (score, tweet.clone()))
        })
        .collect::<Result<_, _>>()?;
    scored.sort_by(|a, b| {
        let key_a = if use_normalized { a.0.normalized_score } else { a.0.raw_score };
        let key_b = if use_normalized { b.0.normalized_score } else { b.0.raw_score };
        key_b
            .total_cmp(&key_a)
            .then_with(|| a.0.tweet_position.cmp(&b.0.tweet_position))
    });
    let entries = scored
        .into_iter()
        .enumerate()
        .map(|(i, (score, tweet))| RankedEntry {
            rank: i + 1,
            score,
            tweet,
        })
        .collect();
    Ok(RankedList { entries })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::lexicon::{load_lexicon, LexiconKind};

    fn ss_from_texts(texts: &[&str]) -> SampleSpace {
        let tweets = texts
            .iter()
            .enumerate()
            .map(|(i, t)| Tweet::new(t, i).unwrap())
            .collect();
        SampleSpace::from_tweets(tweets)
    }

    fn filter(words: &str) -> Lexicon {
        load_lexicon(words, LexiconKind::Filter).unwrap()
    }

    fn cnfilter(words: &str) -> Lexicon {
        load_lexicon(words, LexiconKind::CnFilter).unwrap()
    }

    fn corpus_a() -> SampleSpace {
        ss_from_texts(&[
            "the match was great",
            "great match today",
            "great goals",
        ])
    }

    #[test]
    fn scores_sum_relative_frequencies_of_unfiltered_tokens() {
        let ss = corpus_a();
        let index = FrequencyIndex::build(&ss);
        let score = score_tweet(&ss.tweets()[1], &index, &filter("the\nwas"), &cnfilter(""))
            .unwrap();
        assert!((score.raw_score - 6.0 / 9.0).abs() < 1e-15);
        assert_eq!(score.cn_count, 0);
        assert!(!score.all_common);
        assert_eq!(score.token_count, 3);
        assert_eq!(score.char_count, 17);
    }

    #[test]
    fn all_filter_tweet_scores_zero() {
        let ss = corpus_a();
        let index = FrequencyIndex::build(&ss);
        let tweet = Tweet::new("the was the", 9).unwrap();
        let score = score_tweet(&tweet, &index, &filter("the\nwas"), &cnfilter("")).unwrap();
        assert_eq!(score.raw_score, 0.0);
    }

    #[test]
    fn all_common_tweet_sets_the_flag() {
        let ss = corpus_a();
        let index = FrequencyIndex::build(&ss);
        let tweet = Tweet::new("great match", 9).unwrap();
        let score =
            score_tweet(&tweet, &index, &filter(""), &cnfilter("great\nmatch")).unwrap();
        assert_eq!(score.cn_count, 2);
        assert!(score.all_common);
    }

    #[test]
    fn zero_token_tweet_is_vacuously_all_common() {
        let ss = corpus_a();
        let index = FrequencyIndex::build(&ss);
        let tweet = Tweet::new("#only @markers", 9).unwrap();
        let score = score_tweet(&tweet, &index, &filter(""), &cnfilter("")).unwrap();
        assert_eq!(score.token_count, 0);
        assert!(score.all_common);
        assert_eq!(score.raw_score, 0.0);
        assert_eq!(score.normalized_score, 0.0);
    }

    #[test]
    fn words_outside_the_index_contribute_nothing() {
        let ss = corpus_a();
        let index = FrequencyIndex::build(&ss);
        let tweet = Tweet::new("unheard words", 9).unwrap();
        let score = score_tweet(&tweet, &index, &filter(""), &cnfilter("")).unwrap();
        assert_eq!(score.raw_score, 0.0);
    }

    #[test]
    fn scoring_against_an_empty_index_errors() {
        let tweet = Tweet::new("anything", 0).unwrap();
        let index = FrequencyIndex::default();
        assert!(matches!(
            score_tweet(&tweet, &index, &filter(""), &cnfilter("")),
            Err(Error::EmptyIndex)
        ));
    }

    #[test]
    fn normalization_examples() {
        assert!((normalize_score(0.4, 70) - 0.2).abs() < 1e-15);
        assert_eq!(normalize_score(0.4, 140), 0.4);
        assert_eq!(normalize_score(123.0, 0), 0.0);
        // Above the budget the fraction clamps to 1.
        assert_eq!(normalize_score(0.4, 500), 0.4);
    }

    #[test]
    fn ranking_over_corpus_a() {
        let ss = corpus_a();
        let index = FrequencyIndex::build(&ss);
        let ranked =
            rank_tweets(&ss, &index, &filter("the\nwas"), &cnfilter(""), false).unwrap();
        let order: Vec<usize> = ranked
            .entries()
            .iter()
            .map(|e| e.score.tweet_position)
            .collect();
        assert_eq!(order, [1, 0, 2]);
        let expected = [6.0 / 9.0, 5.0 / 9.0, 4.0 / 9.0];
        for (entry, want) in ranked.entries().iter().zip(expected) {
            assert!((entry.score.raw_score - want).abs() < 1e-15);
        }
        assert_eq!(
            ranked.entries().iter().map(|e| e.rank).collect::<Vec<_>>(),
            [1, 2, 3]
        );
    }

    #[test]
    fn ties_fall_back_to_corpus_position() {
        let ss = ss_from_texts(&["same text", "same text", "same text"]);
        let index = FrequencyIndex::build(&ss);
        let ranked = rank_tweets(&ss, &index, &filter(""), &cnfilter(""), false).unwrap();
        let order: Vec<usize> = ranked
            .entries()
            .iter()
            .map(|e| e.score.tweet_position)
            .collect();
        assert_eq!(order, [0, 1, 2]);
    }

    #[test]
    fn normalized_ranking_prefers_longer_tweets_on_equal_raw_score() {
        // Same tokens, different character counts (internal double space).
        let ss = ss_from_texts(&["top top", "top  top"]);
        let index = FrequencyIndex::build(&ss);
        let raw_ranked = rank_tweets(&ss, &index, &filter(""), &cnfilter(""), false).unwrap();
        assert_eq!(raw_ranked.entries()[0].score.tweet_position, 0);

        let norm_ranked = rank_tweets(&ss, &index, &filter(""), &cnfilter(""), true).unwrap();
        assert_eq!(norm_ranked.entries()[0].score.tweet_position, 1);
        assert_eq!(norm_ranked.entries()[0].score.char_count, 8);
    }

    #[test]
    fn ranking_an_empty_sample_space_errors() {
        let ss = SampleSpace::from_tweets(Vec::new());
        let index = FrequencyIndex::build(&corpus_a());
        assert!(matches!(
            rank_tweets(&ss, &index, &filter(""), &cnfilter(""), false),
            Err(Error::EmptySampleSpace)
        ));
    }

    fn text_strategy() -> impl Strategy<Value = String> {
        prop::collection::vec("[a-d]{1,3}", 1..10).prop_map(|tokens| tokens.join(" "))
    }

    proptest! {
        #[test]
        fn raw_score_matches_the_brute_force_sum(
            texts in prop::collection::vec(text_strategy(), 1..15),
            filter_words in prop::collection::hash_set("[a-d]{1,3}", 0..6),
        ) {
            let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
            let ss = ss_from_texts(&refs);
            let index = FrequencyIndex::build(&ss);
            let filter_lex = filter(&filter_words.iter().cloned().collect::<Vec<_>>().join("\n"));
            for tweet in ss.tweets() {
                let score =
                    score_tweet(tweet, &index, &filter_lex, &cnfilter("")).unwrap();
                let mut expected = 0.0;
                for token in tokenize(tweet.text()) {
                    if !filter_words.contains(token.as_str()) {
                        expected += index.mass(&token) / index.total_mass();
                    }
                }
                prop_assert_eq!(score.raw_score, expected);
            }
        }

        #[test]
        fn ranking_is_a_permutation_of_the_sample_space(
            texts in prop::collection::vec(text_strategy(), 1..15),
        ) {
            let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
            let ss = ss_from_texts(&refs);
            let index = FrequencyIndex::build(&ss);
            let ranked = rank_tweets(&ss, &index, &filter(""), &cnfilter(""), false).unwrap();
            prop_assert_eq!(ranked.len(), ss.len());
            let mut positions: Vec<usize> = ranked
                .entries()
                .iter()
                .map(|e| e.score.tweet_position)
                .collect();
            positions.sort_unstable();
            prop_assert_eq!(positions, (0..ss.len()).collect::<Vec<_>>());
            let ranks: Vec<usize> = ranked.entries().iter().map(|e| e.rank).collect();
            prop_assert_eq!(ranks, (1..=ss.len()).collect::<Vec<_>>());
        }

        #[test]
        fn appending_an_indexed_word_strictly_raises_the_score(
            texts in prop::collection::vec(text_strategy(), 1..10),
        ) {
            let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
            let ss = ss_from_texts(&refs);
            let index = FrequencyIndex::build(&ss);
            let base = ss.tweets()[0].clone();
            let base_score =
                score_tweet(&base, &index, &filter(""), &cnfilter("")).unwrap();
            // Append a word known to carry positive mass.
            let (heaviest, _) = index
                .iter()
                .max_by(|a, b| a.1.total_cmp(&b.1).then_with(|| b.0.cmp(a.0)))
                .unwrap();
            let longer =
                Tweet::new(&format!("{} {}", base.text(), heaviest), 0).unwrap();
            let longer_score =
                score_tweet(&longer, &index, &filter(""), &cnfilter("")).unwrap();
            prop_assert!(longer_score.raw_score > base_score.raw_score);
        }

        #[test]
        fn uniform_mass_scaling_leaves_scores_unchanged(
            texts in prop::collection::vec(text_strategy(), 1..10),
            li in 0.05f64..1.0,
        ) {
            let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
            let ss = ss_from_texts(&refs);
            let index = FrequencyIndex::build(&ss);
            let scaled = index.decay_update(&[], li).unwrap();
            for tweet in ss.tweets() {
                let a = score_tweet(tweet, &index, &filter(""), &cnfilter("")).unwrap();
                let b = score_tweet(tweet, &scaled, &filter(""), &cnfilter("")).unwrap();
                prop_assert!((a.raw_score - b.raw_score).abs() < 1e-12);
            }
        }
    }
}
