//! Wolof letter and grapheme inventories, and segmentation of words into
//! classified graphemes.
//!
//! The canonical inventory has 20 weak consonants, 16 geminates, 9
//! prenasalized consonants, 10 short vowels and 7 long vowels. Every
//! grapheme is one or two Unicode scalars. All comparisons are made over
//! lowercase NFC text; callers normalize upstream (see [`crate::preprocess`]),
//! and anything else simply fails to segment.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use unicode_normalization::UnicodeNormalization;

use crate::error::{read_file, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphemeClass {
    WeakConsonant,
    GeminateConsonant,
    PrenasalizedConsonant,
    ShortVowel,
    LongVowel,
}

impl GraphemeClass {
    pub const ALL: [GraphemeClass; 5] = [
        GraphemeClass::WeakConsonant,
        GraphemeClass::GeminateConsonant,
        GraphemeClass::PrenasalizedConsonant,
        GraphemeClass::ShortVowel,
        GraphemeClass::LongVowel,
    ];

    /// Geminate and prenasalized consonants form the "strong" group.
    pub fn is_strong(self) -> bool {
        matches!(
            self,
            GraphemeClass::GeminateConsonant | GraphemeClass::PrenasalizedConsonant
        )
    }

    pub fn is_consonant(self) -> bool {
        !self.is_vowel()
    }

    pub fn is_vowel(self) -> bool {
        matches!(self, GraphemeClass::ShortVowel | GraphemeClass::LongVowel)
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphemeClass::WeakConsonant => "weak",
            GraphemeClass::GeminateConsonant => "geminate",
            GraphemeClass::PrenasalizedConsonant => "prenasalized",
            GraphemeClass::ShortVowel => "short",
            GraphemeClass::LongVowel => "long",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s.trim().to_lowercase().as_str() {
            "weak" | "weakconsonant" => GraphemeClass::WeakConsonant,
            "geminate" | "geminateconsonant" => GraphemeClass::GeminateConsonant,
            "prenasalized" | "prenasalised" | "prenasalizedconsonant" => {
                GraphemeClass::PrenasalizedConsonant
            }
            "short" | "shortvowel" => GraphemeClass::ShortVowel,
            "long" | "longvowel" => GraphemeClass::LongVowel,
            _ => return None,
        })
    }
}

impl fmt::Display for GraphemeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grapheme {
    pub text: String,
    pub class: GraphemeClass,
}

impl Grapheme {
    fn scalar_len(&self) -> usize {
        self.text.chars().count()
    }
}

impl fmt::Display for Grapheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.text, self.class)
    }
}

const WEAK: &[&str] = &[
    "p", "t", "c", "k", "q", "b", "d", "j", "g", "m", "n", "ñ", "ŋ", "f", "r", "s", "x", "w", "l",
    "y",
];
const GEMINATE: &[&str] = &[
    "pp", "tt", "cc", "kk", "bb", "dd", "jj", "gg", "ŋŋ", "ww", "ll", "mm", "nn", "yy", "ññ", "qq",
];
const PRENASALIZED: &[&str] = &["mp", "nt", "nc", "nk", "nq", "mb", "nd", "nj", "ng"];
const SHORT: &[&str] = &["a", "à", "ã", "i", "o", "ó", "u", "e", "ë", "é"];
const LONG: &[&str] = &["ii", "uu", "éé", "óó", "ee", "oo", "aa"];

/// A grapheme inventory. Immutable once built.
#[derive(Debug, Clone)]
pub struct Alphabet {
    graphemes: BTreeMap<String, GraphemeClass>,
    letters: BTreeSet<char>,
    max_len: usize,
}

impl Alphabet {
    /// The canonical Wolof inventory.
    pub fn canonical() -> &'static Alphabet {
        static CANONICAL: OnceLock<Alphabet> = OnceLock::new();
        CANONICAL.get_or_init(|| {
            let tables = [
                (WEAK, GraphemeClass::WeakConsonant),
                (GEMINATE, GraphemeClass::GeminateConsonant),
                (PRENASALIZED, GraphemeClass::PrenasalizedConsonant),
                (SHORT, GraphemeClass::ShortVowel),
                (LONG, GraphemeClass::LongVowel),
            ];
            let entries = tables
                .iter()
                .flat_map(|(list, class)| list.iter().map(move |g| (g.to_string(), *class)))
                .enumerate()
                .map(|(i, (g, class))| (i + 1, g, class));
            Alphabet::from_entries(entries).expect("canonical inventory is well formed")
        })
    }

    fn from_entries(
        entries: impl IntoIterator<Item = (usize, String, GraphemeClass)>,
    ) -> Result<Self> {
        let mut graphemes = BTreeMap::new();
        let mut letters = BTreeSet::new();
        let mut max_len = 1;
        for (line, text, class) in entries {
            let len = text.chars().count();
            if !(1..=2).contains(&len) {
                return Err(Error::MalformedAlphabet {
                    line,
                    reason: format!("grapheme {text:?} must be one or two scalars"),
                });
            }
            if let Some(prev) = graphemes.insert(text.clone(), class) {
                if prev != class {
                    return Err(Error::MalformedAlphabet {
                        line,
                        reason: format!("{text:?} listed as both {prev} and {class}"),
                    });
                }
            }
            letters.extend(text.chars());
            max_len = max_len.max(len);
        }
        Ok(Alphabet {
            graphemes,
            letters,
            max_len,
        })
    }

    /// Parses an override inventory: one `grapheme<TAB>class` pair per line,
    /// `#` comments and blank lines ignored.
    pub fn parse_override(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |reason: String| Error::MalformedAlphabet {
                line: i + 1,
                reason,
            };
            let mut cols = line.split('\t');
            let (Some(g), Some(c), None) = (cols.next(), cols.next(), cols.next()) else {
                return Err(malformed("expected grapheme<TAB>class".into()));
            };
            let class = GraphemeClass::parse(c).ok_or_else(|| malformed(format!("unknown class {c:?}")))?;
            let g: String = g.trim().nfc().collect::<String>().to_lowercase();
            entries.push((i + 1, g, class));
        }
        Self::from_entries(entries)
    }

    pub fn load_override(path: &Path) -> Result<Self> {
        Self::parse_override(&read_file(path)?)
    }

    pub fn letters(&self) -> impl Iterator<Item = char> + '_ {
        self.letters.iter().copied()
    }

    pub fn graphemes(&self) -> impl Iterator<Item = (&str, GraphemeClass)> + '_ {
        self.graphemes.iter().map(|(t, c)| (t.as_str(), *c))
    }

    pub fn class_of(&self, text: &str) -> Option<GraphemeClass> {
        self.graphemes.get(text).copied()
    }

    pub fn is_letter(&self, c: char) -> bool {
        if self.letters.contains(&c) {
            return true;
        }
        let mut folded = c.to_string().nfc().collect::<String>().to_lowercase();
        folded = folded.nfc().collect();
        let mut it = folded.chars();
        matches!((it.next(), it.next()), (Some(f), None) if self.letters.contains(&f))
    }

    /// Greedy longest-match segmentation, left to right.
    pub fn segment(&self, word: &str) -> Result<Vec<Grapheme>> {
        let chars: Vec<char> = word.chars().collect();
        let mut out = Vec::with_capacity(chars.len());
        let mut i = 0;
        while i < chars.len() {
            let g = (1..=self.max_len.min(chars.len() - i))
                .rev()
                .find_map(|len| self.lookup(&chars[i..i + len]))
                .ok_or_else(|| Error::Unsegmentable {
                    word: word.to_string(),
                    index: i,
                    ch: chars[i],
                })?;
            i += g.scalar_len();
            out.push(g);
        }
        Ok(out)
    }

    /// Every admissible segmentation, in preference order: at each position
    /// the two-scalar reading is tried before the one-scalar reading, so the
    /// first parse is the greedy one.
    ///
    /// A doubled letter never splits into two identical single graphemes when
    /// the doubled form is itself in the inventory ("pp" is always the
    /// geminate, "aa" always the long vowel). Heterogeneous digraphs such as
    /// "nd" may be read either way.
    pub fn segmentations(&self, word: &str) -> Result<Vec<Vec<Grapheme>>> {
        let chars: Vec<char> = word.chars().collect();
        if let Some(i) = chars.iter().position(|&c| !self.letters.contains(&c)) {
            return Err(Error::Unsegmentable {
                word: word.to_string(),
                index: i,
                ch: chars[i],
            });
        }
        let mut all = Vec::new();
        let mut current = Vec::new();
        self.enumerate(&chars, 0, &mut current, &mut all);
        if all.is_empty() && !chars.is_empty() {
            let index = self.segment(word).err().map_or(0, |e| match e {
                Error::Unsegmentable { index, .. } => index,
                _ => 0,
            });
            return Err(Error::Unsegmentable {
                word: word.to_string(),
                index,
                ch: chars[index],
            });
        }
        Ok(all)
    }

    fn enumerate(
        &self,
        chars: &[char],
        pos: usize,
        current: &mut Vec<Grapheme>,
        all: &mut Vec<Vec<Grapheme>>,
    ) {
        if pos == chars.len() {
            all.push(current.clone());
            return;
        }
        for g in self.candidates_at(chars, pos) {
            if let Some(prev) = current.last() {
                if !self.admits_adjacent(prev, &g) {
                    continue;
                }
            }
            let len = g.scalar_len();
            current.push(g);
            self.enumerate(chars, pos + len, current, all);
            current.pop();
        }
    }

    /// Graphemes that can start at `pos`, longest first.
    pub(crate) fn candidates_at(&self, chars: &[char], pos: usize) -> Vec<Grapheme> {
        (1..=self.max_len.min(chars.len() - pos))
            .rev()
            .filter_map(|len| self.lookup(&chars[pos..pos + len]))
            .collect()
    }

    /// Whether `next` may directly follow `prev` within one parse.
    pub(crate) fn admits_adjacent(&self, prev: &Grapheme, next: &Grapheme) -> bool {
        if prev.text != next.text || prev.scalar_len() != 1 {
            return true;
        }
        let doubled = format!("{}{}", prev.text, next.text);
        !self.graphemes.contains_key(&doubled)
    }

    fn lookup(&self, scalars: &[char]) -> Option<Grapheme> {
        let text: String = scalars.iter().collect();
        self.graphemes
            .get(&text)
            .map(|&class| Grapheme { text, class })
    }
}

/// Membership in the canonical Wolof alphabet, after NFC composition and
/// lowercasing of `c`.
pub fn is_wolof_char(c: char) -> bool {
    Alphabet::canonical().is_letter(c)
}

/// Greedy segmentation against the canonical inventory.
pub fn segment(word: &str) -> Result<Vec<Grapheme>> {
    Alphabet::canonical().segment(word)
}

/// All admissible segmentations against the canonical inventory.
pub fn segmentations(word: &str) -> Result<Vec<Vec<Grapheme>>> {
    Alphabet::canonical().segmentations(word)
}
