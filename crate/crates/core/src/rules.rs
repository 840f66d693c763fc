//! Phonotactic validation of a token before lexicon lookup.
//!
//! Two prohibitions are enforced:
//!
//! * `INITIAL_STRONG`: a word may not start with a geminate consonant
//!   (prenasalized consonants are allowed word-initially);
//! * `STRONG_AFTER_LONG`: no strong consonant (geminate or prenasalized)
//!   directly after a long vowel.
//!
//! A word is valid when at least one admissible segmentation (see
//! [`Alphabet::segmentations`]) breaks neither rule. Words holding a
//! non-Wolof scalar get a `FOREIGN_CHAR` verdict.

use std::collections::HashSet;
use std::fmt;

use crate::alphabet::{Alphabet, Grapheme, GraphemeClass};
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleId {
    ForeignChar,
    InitialStrong,
    StrongAfterLong,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::ForeignChar => "FOREIGN_CHAR",
            RuleId::InitialStrong => "INITIAL_STRONG",
            RuleId::StrongAfterLong => "STRONG_AFTER_LONG",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: RuleId,
    /// Grapheme index in the first (greedy) parse. For `FOREIGN_CHAR` this
    /// is the scalar index of the offending character.
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleVerdict {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl RuleVerdict {
    fn valid() -> Self {
        RuleVerdict {
            valid: true,
            violations: Vec::new(),
        }
    }

    pub fn has(&self, rule: RuleId) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

/// Rule violations of one complete parse.
pub fn violations_of(parse: &[Grapheme]) -> Vec<Violation> {
    let mut out = Vec::new();
    if parse
        .first()
        .is_some_and(|g| g.class == GraphemeClass::GeminateConsonant)
    {
        out.push(Violation {
            rule: RuleId::InitialStrong,
            index: 0,
        });
    }
    for (i, pair) in parse.windows(2).enumerate() {
        if pair[0].class == GraphemeClass::LongVowel && pair[1].class.is_strong() {
            out.push(Violation {
                rule: RuleId::StrongAfterLong,
                index: i + 1,
            });
        }
    }
    out
}

#[derive(Debug, Clone, Copy)]
pub struct Validator<'a> {
    alphabet: &'a Alphabet,
}

impl Default for Validator<'static> {
    fn default() -> Self {
        Validator {
            alphabet: Alphabet::canonical(),
        }
    }
}

impl<'a> Validator<'a> {
    pub fn new(alphabet: &'a Alphabet) -> Self {
        Validator { alphabet }
    }

    pub fn validate(&self, word: &str) -> RuleVerdict {
        let greedy = match self.alphabet.segment(word) {
            Ok(g) => g,
            Err(Error::Unsegmentable { index, .. }) => {
                return RuleVerdict {
                    valid: false,
                    violations: vec![Violation {
                        rule: RuleId::ForeignChar,
                        index,
                    }],
                };
            }
            Err(e) => unreachable!("segment only fails with Unsegmentable: {e}"),
        };
        let violations = violations_of(&greedy);
        if violations.is_empty() {
            return RuleVerdict::valid();
        }
        let chars: Vec<char> = word.chars().collect();
        let mut search = Search {
            alphabet: self.alphabet,
            chars: &chars,
            dead: HashSet::new(),
        };
        if search.valid_from(0, None) {
            RuleVerdict::valid()
        } else {
            RuleVerdict {
                valid: false,
                violations,
            }
        }
    }
}

/// Depth-first search for a rule-abiding parse. The outcome from a position
/// depends only on the previous grapheme, so failed (position, previous)
/// states are remembered.
struct Search<'a> {
    alphabet: &'a Alphabet,
    chars: &'a [char],
    dead: HashSet<(usize, Option<Grapheme>)>,
}

impl Search<'_> {
    fn valid_from(&mut self, pos: usize, prev: Option<&Grapheme>) -> bool {
        if pos == self.chars.len() {
            return true;
        }
        let key = (pos, prev.cloned());
        if self.dead.contains(&key) {
            return false;
        }
        for g in self.alphabet.candidates_at(self.chars, pos) {
            let allowed = match prev {
                None => g.class != GraphemeClass::GeminateConsonant,
                Some(p) => {
                    self.alphabet.admits_adjacent(p, &g)
                        && !(p.class == GraphemeClass::LongVowel && g.class.is_strong())
                }
            };
            let len = g.text.chars().count();
            if allowed && self.valid_from(pos + len, Some(&g)) {
                return true;
            }
        }
        self.dead.insert(key);
        false
    }
}

/// Validates against the canonical alphabet.
pub fn validate(word: &str) -> RuleVerdict {
    Validator::default().validate(word)
}
