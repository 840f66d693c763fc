//! Spelling error detection and correction for Wolof.
//!
//! A token is cleaned ([`preprocess`]), checked against phonotactic rules
//! ([`rules`]) and looked up in a trie lexicon ([`lexicon`]). Flagged words
//! have French-style spellings rewritten ([`translit`]) and are matched
//! against the lexicon by weighted Levenshtein distance ([`distance`],
//! [`suggest`]); the cheapest candidate becomes the correction
//! ([`pipeline`]). [`eval`] scores the whole chain on a labeled corpus.
//!
//! ```
//! use wolof_spell::{SpellChecker, TrieDict};
//!
//! let checker = SpellChecker::new(TrieDict::sample());
//! let report = checker.check_text("Deuk bi").unwrap();
//! assert_eq!(report.corrected_text, "dëkk bi");
//! ```

pub mod alphabet;
pub mod cli;
pub mod distance;
pub mod error;
pub mod eval;
pub mod lexicon;
pub mod pipeline;
pub mod preprocess;
pub mod rules;
pub mod suggest;
pub mod translit;

pub use alphabet::{is_wolof_char, segment, Alphabet, Grapheme, GraphemeClass};
pub use distance::{plain_edit_distance, wld, wld_oracle, Cost, CostModel};
pub use error::{Error, Result};
pub use eval::{evaluate, CorpusEntry, EvalReport};
pub use lexicon::TrieDict;
pub use pipeline::{CheckReport, SpellChecker, Status, WordResult};
pub use rules::{validate, RuleId, RuleVerdict};
pub use suggest::{best, suggest, Suggestion, SuggestionList};
pub use translit::RuleSet;
