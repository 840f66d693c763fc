//! End-to-end checking: preprocess, rules, lexicon lookup, and on failure
//! transliteration, suggestion and auto-correction with the top candidate.

use crate::alphabet::Alphabet;
use crate::distance::{Cost, CostModel};
use crate::error::Result;
use crate::lexicon::TrieDict;
use crate::preprocess::{clean, normalize, scan, DropReason, ExclusionList, Piece};
use crate::rules::{RuleVerdict, Validator};
use crate::suggest::{suggest, SuggestionList, DEFAULT_K};
use crate::translit::RuleSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Passed the rules and found in the lexicon.
    Correct,
    /// Flagged and replaced by the top suggestion.
    Corrected,
    /// Flagged, but no lexicon word fell within the cost bound.
    NoSuggestion,
    /// Removed by preprocessing (digits, exclusion list); never checked.
    Dropped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Correct => "correct",
            Status::Corrected => "corrected",
            Status::NoSuggestion => "no-suggestion",
            Status::Dropped => "dropped",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlaggedBy {
    Rules,
    Lexicon,
}

impl FlaggedBy {
    pub fn as_str(self) -> &'static str {
        match self {
            FlaggedBy::Rules => "rules",
            FlaggedBy::Lexicon => "lexicon",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordResult {
    /// Token text after cleaning.
    pub original: String,
    /// Index among kept tokens; `None` for dropped pieces.
    pub position: Option<usize>,
    pub status: Status,
    pub corrected: Option<String>,
    pub suggestions: Option<SuggestionList>,
    pub flagged_by: Option<FlaggedBy>,
    /// Rules verdict, when the rules ran.
    pub verdict: Option<RuleVerdict>,
    /// Query handed to the suggester, when correction ran.
    pub transformed: Option<String>,
    pub drop_reason: Option<DropReason>,
}

impl WordResult {
    fn dropped(surface: String, reason: DropReason) -> Self {
        WordResult {
            original: surface,
            position: None,
            status: Status::Dropped,
            corrected: None,
            suggestions: None,
            flagged_by: None,
            verdict: None,
            transformed: None,
            drop_reason: Some(reason),
        }
    }

    pub fn is_flagged(&self) -> bool {
        self.flagged_by.is_some()
    }

    /// The word that ends up in corrected text, if any.
    pub fn output(&self) -> Option<&str> {
        match self.status {
            Status::Dropped => None,
            Status::Corrected => self.corrected.as_deref(),
            Status::Correct | Status::NoSuggestion => Some(&self.original),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub results: Vec<WordResult>,
    /// Kept tokens with corrections applied, single-space separated; input
    /// lines stay on separate lines.
    pub corrected_text: String,
}

/// A configured spell checker. All parts are read-only once built.
#[derive(Debug, Clone)]
pub struct SpellChecker {
    lexicon: TrieDict,
    costs: CostModel,
    alphabet: Alphabet,
    translit: RuleSet,
    exclusions: Option<ExclusionList>,
    k: usize,
    max_cost: Option<Cost>,
}

impl SpellChecker {
    /// Default costs, canonical alphabet, default transliteration rules,
    /// k = 10, no cost bound.
    pub fn new(lexicon: TrieDict) -> Self {
        SpellChecker {
            lexicon,
            costs: CostModel::default(),
            alphabet: Alphabet::canonical().clone(),
            translit: RuleSet::default(),
            exclusions: None,
            k: DEFAULT_K,
            max_cost: None,
        }
    }

    pub fn with_costs(mut self, costs: CostModel) -> Self {
        self.costs = costs;
        self
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    pub fn with_translit(mut self, rules: RuleSet) -> Self {
        self.translit = rules;
        self
    }

    pub fn with_exclusions(mut self, exclusions: ExclusionList) -> Self {
        self.exclusions = Some(exclusions);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn with_max_cost(mut self, max_cost: Option<Cost>) -> Self {
        self.max_cost = max_cost;
        self
    }

    pub fn lexicon(&self) -> &TrieDict {
        &self.lexicon
    }

    pub fn costs(&self) -> &CostModel {
        &self.costs
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Checks one token. The word is normalized first; one holding a digit
    /// or listed for exclusion comes back `Dropped`.
    pub fn check_word(&self, word: &str) -> Result<WordResult> {
        let word = normalize(word.trim());
        if word.chars().any(char::is_numeric) {
            return Ok(WordResult::dropped(word, DropReason::Digit));
        }
        if self.exclusions.as_ref().is_some_and(|ex| ex.contains(&word)) {
            return Ok(WordResult::dropped(word, DropReason::Excluded));
        }
        self.check_token(word, 0)
    }

    fn check_token(&self, word: String, position: usize) -> Result<WordResult> {
        let verdict = Validator::new(&self.alphabet).validate(&word);
        // A rules failure goes straight to correction; the lexicon is only
        // consulted for words that pass.
        let flagged_by = if !verdict.valid {
            Some(FlaggedBy::Rules)
        } else if !self.lexicon.contains(&word) {
            Some(FlaggedBy::Lexicon)
        } else {
            None
        };
        let mut result = WordResult {
            original: word,
            position: Some(position),
            status: Status::Correct,
            corrected: None,
            suggestions: None,
            flagged_by,
            verdict: Some(verdict),
            transformed: None,
            drop_reason: None,
        };
        if flagged_by.is_none() {
            return Ok(result);
        }
        let query = self.translit.transform_with(&result.original, &self.alphabet);
        let suggestions = suggest(&query, &self.lexicon, &self.costs, self.k, self.max_cost)?;
        match suggestions.first() {
            Some(top) => {
                result.status = Status::Corrected;
                result.corrected = Some(top.word.clone());
            }
            None => result.status = Status::NoSuggestion,
        }
        result.transformed = Some(query);
        result.suggestions = Some(suggestions);
        Ok(result)
    }

    /// Ranked candidates for `word`: the word itself first when it checks
    /// as correct, otherwise the candidates for its transliterated form.
    pub fn suggestions_for(&self, word: &str) -> Result<SuggestionList> {
        let result = self.check_word(word)?;
        match result.suggestions {
            Some(list) => Ok(list),
            None => suggest(
                &result.original,
                &self.lexicon,
                &self.costs,
                self.k,
                self.max_cost,
            ),
        }
    }

    pub fn check_text(&self, text: &str) -> Result<CheckReport> {
        let mut results = Vec::new();
        let mut lines = Vec::new();
        let mut position = 0;
        for line in text.lines() {
            let mut words = Vec::new();
            for piece in scan(&clean(line), self.exclusions.as_ref()) {
                match piece {
                    Piece::Kept(token) => {
                        let r = self.check_token(token.surface, position)?;
                        position += 1;
                        words.push(r.output().unwrap_or_default().to_string());
                        results.push(r);
                    }
                    Piece::Dropped { surface, reason } => {
                        results.push(WordResult::dropped(surface, reason));
                    }
                }
            }
            lines.push(words.join(" "));
        }
        Ok(CheckReport {
            results,
            corrected_text: lines.join("\n"),
        })
    }
}
