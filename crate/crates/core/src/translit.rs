//! Rewriting of French-influenced spellings into Wolof orthography, followed
//! by removal of letters foreign to the Wolof alphabet.
//!
//! A [`RuleSet`] is a list of pattern → replacement rules applied in one
//! left-to-right pass. At each position the first matching rule in
//! (priority, longest pattern) order fires and the cursor skips the matched
//! scalars; otherwise the scalar is copied. Scalars outside the alphabet
//! are deleted after the pass, so patterns such as "kh" still see their `h`.
//!
//! Pattern syntax: lowercase literal scalars (1 to 4), optionally preceded
//! by `C` (the previous input scalar must be a consonant; not consumed) and
//! optionally followed by `$` (the match must end the word).

use std::cmp::Reverse;
use std::collections::HashSet;
use std::path::Path;

use crate::alphabet::{is_wolof_char, Alphabet};
use crate::error::{read_file, Error, Result};

/// Rule table shipped with the crate.
pub const DEFAULT_RULES: &str = include_str!("../data/translit_rules.tsv");

const VOWELS: &str = "aàâãäeéèêëiîïoóôöuùûü";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslitRule {
    /// Pattern as written, anchors included.
    pub pattern: String,
    pub replacement: String,
    pub priority: u32,
    literal: Vec<char>,
    after_consonant: bool,
    at_end: bool,
}

impl TranslitRule {
    pub fn new(pattern: &str, replacement: &str, priority: u32) -> Result<Self> {
        Self::build(pattern, replacement, priority, 0)
    }

    fn build(pattern: &str, replacement: &str, priority: u32, line: usize) -> Result<Self> {
        let malformed = |reason: String| Error::MalformedRules { line, reason };
        let mut body = pattern;
        let after_consonant = body.starts_with('C');
        if after_consonant {
            body = &body[1..];
        }
        let at_end = body.ends_with('$');
        if at_end {
            body = &body[..body.len() - 1];
        }
        let literal: Vec<char> = body.chars().collect();
        if !(1..=4).contains(&literal.len()) {
            return Err(malformed(format!(
                "pattern {pattern:?} must have 1 to 4 literal scalars"
            )));
        }
        if literal.iter().any(|c| c.is_uppercase() || *c == '$') {
            return Err(malformed(format!("pattern {pattern:?} is not lowercase")));
        }
        if replacement.chars().count() > 2 {
            return Err(malformed(format!(
                "replacement {replacement:?} is longer than 2 scalars"
            )));
        }
        if let Some(c) = replacement.chars().find(|&c| !is_wolof_char(c)) {
            return Err(malformed(format!(
                "replacement {replacement:?} contains non-Wolof {c:?}"
            )));
        }
        Ok(TranslitRule {
            pattern: pattern.to_string(),
            replacement: replacement.to_string(),
            priority,
            literal,
            after_consonant,
            at_end,
        })
    }

    fn matches(&self, chars: &[char], pos: usize) -> bool {
        let end = pos + self.literal.len();
        if end > chars.len() || chars[pos..end] != self.literal[..] {
            return false;
        }
        if self.at_end && end != chars.len() {
            return false;
        }
        if self.after_consonant {
            let prev_is_consonant = pos
                .checked_sub(1)
                .map(|p| chars[p])
                .is_some_and(|c| c.is_alphabetic() && !VOWELS.contains(c));
            if !prev_is_consonant {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone)]
pub struct RuleSet {
    rules: Vec<TranslitRule>,
}

impl Default for RuleSet {
    fn default() -> Self {
        Self::parse(DEFAULT_RULES).expect("bundled rule table is well formed")
    }
}

impl RuleSet {
    pub fn new(rules: Vec<TranslitRule>) -> Result<Self> {
        let mut seen = HashSet::new();
        for r in &rules {
            if !seen.insert(r.pattern.clone()) {
                return Err(Error::MalformedRules {
                    line: 0,
                    reason: format!("duplicate pattern {:?}", r.pattern),
                });
            }
        }
        let mut rules = rules;
        rules.sort_by_key(|r| (r.priority, Reverse(r.literal.len()), r.pattern.clone()));
        Ok(RuleSet { rules })
    }

    /// An empty rule set: only foreign-letter elimination happens.
    pub fn empty() -> Self {
        RuleSet { rules: Vec::new() }
    }

    /// TSV with columns pattern, replacement, priority. `#` starts a comment
    /// line; an empty replacement column deletes the match.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rules = Vec::new();
        let mut seen = HashSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            let [pattern, replacement, priority] = cols[..] else {
                return Err(Error::MalformedRules {
                    line: line_no,
                    reason: format!("expected 3 tab-separated columns, found {}", cols.len()),
                });
            };
            let priority = priority
                .trim()
                .parse()
                .map_err(|_| Error::MalformedRules {
                    line: line_no,
                    reason: format!("bad priority {priority:?}"),
                })?;
            let pattern = pattern.trim();
            if !seen.insert(pattern.to_string()) {
                return Err(Error::MalformedRules {
                    line: line_no,
                    reason: format!("duplicate pattern {pattern:?}"),
                });
            }
            rules.push(TranslitRule::build(
                pattern,
                replacement.trim(),
                priority,
                line_no,
            )?);
        }
        Self::new(rules)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&read_file(path)?)
    }

    /// Rules in application order.
    pub fn rules(&self) -> &[TranslitRule] {
        &self.rules
    }

    /// Applies the rules, then drops scalars outside the canonical alphabet.
    pub fn transform(&self, word: &str) -> String {
        self.transform_with(word, Alphabet::canonical())
    }

    pub fn transform_with(&self, word: &str, alphabet: &Alphabet) -> String {
        let chars: Vec<char> = word.chars().collect();
        let mut out = String::with_capacity(word.len());
        let mut pos = 0;
        while pos < chars.len() {
            match self.rules.iter().find(|r| r.matches(&chars, pos)) {
                Some(rule) => {
                    out.push_str(&rule.replacement);
                    pos += rule.literal.len();
                }
                None => {
                    out.push(chars[pos]);
                    pos += 1;
                }
            }
        }
        out.retain(|c| alphabet.is_letter(c));
        out
    }
}

/// Transforms with the default rule set.
pub fn transform(word: &str) -> String {
    RuleSet::default().transform(word)
}
