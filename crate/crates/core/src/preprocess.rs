//! Text cleaning ahead of detection: punctuation removal, normalization and
//! word tokenization.

use std::collections::BTreeSet;
use std::path::Path;

use unicode_general_category::{get_general_category, GeneralCategory};
use unicode_normalization::UnicodeNormalization;

use crate::error::{read_file, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    /// 0-based index among kept tokens.
    pub position: usize,
}

fn is_punctuation(c: char) -> bool {
    matches!(
        get_general_category(c),
        GeneralCategory::ConnectorPunctuation
            | GeneralCategory::DashPunctuation
            | GeneralCategory::OpenPunctuation
            | GeneralCategory::ClosePunctuation
            | GeneralCategory::InitialPunctuation
            | GeneralCategory::FinalPunctuation
            | GeneralCategory::OtherPunctuation
    )
}

/// Replaces every punctuation scalar with a single space.
pub fn strip_punctuation(text: &str) -> String {
    text.chars()
        .map(|c| if is_punctuation(c) { ' ' } else { c })
        .collect()
}

/// NFC composition followed by lowercasing.
pub fn normalize(text: &str) -> String {
    // Lowercasing can emit combining sequences (e.g. U+0130), so compose again.
    text.nfc().collect::<String>().to_lowercase().nfc().collect()
}

/// Full cleaning of a single word or a whole text.
pub fn clean(text: &str) -> String {
    normalize(&strip_punctuation(text))
}

/// Why a whitespace-delimited piece was not kept as a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DropReason {
    Digit,
    Excluded,
}

/// One whitespace-delimited piece of cleaned text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    Kept(Token),
    Dropped { surface: String, reason: DropReason },
}

/// Splits cleaned text on whitespace and classifies every piece, keeping
/// dropped ones so callers can report them.
pub fn scan(text: &str, exclusions: Option<&ExclusionList>) -> Vec<Piece> {
    let mut position = 0;
    text.split_whitespace()
        .map(|w| {
            let reason = if w.chars().any(char::is_numeric) {
                Some(DropReason::Digit)
            } else if exclusions.is_some_and(|ex| ex.contains(w)) {
                Some(DropReason::Excluded)
            } else {
                None
            };
            match reason {
                Some(reason) => Piece::Dropped {
                    surface: w.to_string(),
                    reason,
                },
                None => {
                    let token = Token {
                        surface: w.to_string(),
                        position,
                    };
                    position += 1;
                    Piece::Kept(token)
                }
            }
        })
        .collect()
}

/// Whitespace tokenization of cleaned text. Tokens containing a digit are
/// dropped; positions count kept tokens only.
pub fn tokenize(text: &str) -> Vec<Token> {
    scan(text, None)
        .into_iter()
        .filter_map(|p| match p {
            Piece::Kept(t) => Some(t),
            Piece::Dropped { .. } => None,
        })
        .collect()
}

/// Words removed before detection, e.g. known foreign borrowings.
#[derive(Debug, Clone, Default)]
pub struct ExclusionList {
    words: BTreeSet<String>,
}

impl ExclusionList {
    /// One word per line, `#` comments and blank lines ignored. Entries are
    /// normalized the same way as input text.
    pub fn parse(text: &str) -> Self {
        let words = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(normalize)
            .collect();
        ExclusionList { words }
    }

    pub fn load(path: &Path) -> Result<Self> {
        Ok(Self::parse(&read_file(path)?))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}
