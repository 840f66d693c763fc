//! Evaluation against a labeled corpus of valid words and misspellings.
//!
//! Detection is scored with a confusion matrix where the positive class is
//! "valid word": TP is a valid word accepted, FP an invalid word accepted,
//! FN a valid word flagged, TN an invalid word flagged. Correction quality
//! is scored separately with suggestion adequacy (top-1 hit rate) and mean
//! reciprocal rank over the misspellings.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::Path;

use crate::distance::plain_edit_distance;
use crate::error::{read_file, Error, Result};
use crate::pipeline::{SpellChecker, Status};
use crate::preprocess::normalize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Valid,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub word: String,
    pub label: Label,
    /// Correct spelling; present exactly for invalid entries.
    pub gold: Option<String>,
}

impl CorpusEntry {
    pub fn valid(word: &str) -> Self {
        CorpusEntry {
            word: normalize(word),
            label: Label::Valid,
            gold: None,
        }
    }

    pub fn invalid(word: &str, gold: &str) -> Self {
        CorpusEntry {
            word: normalize(word),
            label: Label::Invalid,
            gold: Some(normalize(gold)),
        }
    }
}

/// Parses corpus TSV: `word<TAB>label[<TAB>gold]`, label `valid` or
/// `invalid` in any case, `#` comment lines and blank lines skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let malformed = |reason: String| Error::MalformedCorpus {
            line: i + 1,
            reason,
        };
        let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
        let (word, label, gold) = match cols[..] {
            [w, l] => (w, l, None),
            [w, l, g] => (w, l, Some(g).filter(|g| !g.is_empty())),
            _ => {
                return Err(malformed(format!(
                    "expected 2 or 3 tab-separated columns, found {}",
                    cols.len()
                )))
            }
        };
        if word.is_empty() {
            return Err(malformed("empty word".into()));
        }
        let entry = match (label.to_lowercase().as_str(), gold) {
            ("valid", None) => CorpusEntry::valid(word),
            ("valid", Some(_)) => return Err(malformed("valid entry with a gold column".into())),
            ("invalid", Some(g)) => CorpusEntry::invalid(word, g),
            ("invalid", None) => return Err(malformed("invalid entry without gold".into())),
            (other, _) => return Err(malformed(format!("unknown label {other:?}"))),
        };
        if entry.gold.as_deref() == Some(entry.word.as_str()) {
            return Err(malformed(format!("misspelling equals its gold {word:?}")));
        }
        entries.push(entry);
    }
    Ok(entries)
}

pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    parse_corpus(&read_file(path)?)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ConfusionCounts {
    pub tp: usize,
    pub fp: usize,
    pub fn_: usize,
    pub tn: usize,
}

impl ConfusionCounts {
    pub fn total(&self) -> usize {
        self.tp + self.fp + self.fn_ + self.tn
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

fn harmonic(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        0.0
    } else {
        2.0 / (1.0 / a + 1.0 / b)
    }
}

/// Detection metrics derived from a confusion matrix. Ratios with a zero
/// denominator are reported as 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectionMetrics {
    /// Lexical recall, TP / (TP + FN).
    pub r_c: f64,
    /// Error recall, TN / (TN + FP).
    pub r_i: f64,
    /// Lexical precision, TP / (TP + FP).
    pub p_c: f64,
    /// Error precision, TN / (TN + FN).
    pub p_i: f64,
    pub fm_c: f64,
    pub fm_i: f64,
    /// Predictive accuracy, (TP + TN) / total.
    pub pa: f64,
}

impl DetectionMetrics {
    pub fn from_counts(c: &ConfusionCounts) -> Self {
        let r_c = ratio(c.tp, c.tp + c.fn_);
        let r_i = ratio(c.tn, c.tn + c.fp);
        let p_c = ratio(c.tp, c.tp + c.fp);
        let p_i = ratio(c.tn, c.tn + c.fn_);
        DetectionMetrics {
            r_c,
            r_i,
            p_c,
            p_i,
            fm_c: harmonic(r_c, p_c),
            fm_i: harmonic(r_i, p_i),
            pa: ratio(c.tp + c.tn, c.total()),
        }
    }
}

/// Invalid-entry counts bucketed by unit-cost edit distance to the gold.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Histogram {
    pub buckets: BTreeMap<usize, usize>,
}

impl Histogram {
    pub fn add(&mut self, distance: usize) {
        *self.buckets.entry(distance).or_default() += 1;
    }

    pub fn total(&self) -> usize {
        self.buckets.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    pub fn percentage(&self, distance: usize) -> f64 {
        100.0 * ratio(self.buckets.get(&distance).copied().unwrap_or(0), self.total())
    }

    /// (distance, count, percentage) rows in ascending distance.
    pub fn rows(&self) -> Vec<(usize, usize, f64)> {
        let total = self.total();
        self.buckets
            .iter()
            .map(|(&d, &n)| (d, n, 100.0 * ratio(n, total)))
            .collect()
    }
}

/// Buckets the invalid entries selected by `select`.
pub fn histogram<F>(corpus: &[CorpusEntry], mut select: F) -> Histogram
where
    F: FnMut(&CorpusEntry) -> bool,
{
    let mut h = Histogram::default();
    for e in corpus.iter().filter(|e| e.label == Label::Invalid) {
        if let Some(gold) = &e.gold {
            if select(e) {
                h.add(plain_edit_distance(&e.word, gold));
            }
        }
    }
    h
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub counts: ConfusionCounts,
    pub metrics: DetectionMetrics,
    /// Invalid entries scored (dropped ones excluded).
    pub invalid: usize,
    /// Invalid entries whose top suggestion is the gold.
    pub sa_hits: usize,
    pub sa: f64,
    pub mrr: f64,
    /// Entries removed by preprocessing and left out of every count.
    pub dropped: usize,
    pub histogram_all: Histogram,
    pub histogram_wrong: Histogram,
}

/// Runs every entry through the checker and scores the outcome.
pub fn evaluate(corpus: &[CorpusEntry], checker: &SpellChecker) -> Result<EvalReport> {
    let mut counts = ConfusionCounts::default();
    let mut invalid = 0;
    let mut sa_hits = 0;
    let mut reciprocal_sum = 0.0;
    let mut dropped = 0;
    let mut histogram_all = Histogram::default();
    let mut histogram_wrong = Histogram::default();

    for entry in corpus {
        let result = checker.check_word(&entry.word)?;
        if result.status == Status::Dropped {
            dropped += 1;
            continue;
        }
        let flagged = result.is_flagged();
        match (&entry.label, &entry.gold) {
            (Label::Valid, _) => {
                if flagged {
                    counts.fn_ += 1;
                } else {
                    counts.tp += 1;
                }
            }
            (Label::Invalid, gold) => {
                let gold = gold.as_deref().expect("invalid entries carry a gold");
                if flagged {
                    counts.tn += 1;
                } else {
                    counts.fp += 1;
                }
                invalid += 1;
                let distance = plain_edit_distance(&result.original, gold);
                histogram_all.add(distance);
                let rank = result.suggestions.as_ref().and_then(|s| s.rank_of(gold));
                if let Some(rank) = rank {
                    reciprocal_sum += 1.0 / rank as f64;
                }
                if rank == Some(1) {
                    sa_hits += 1;
                } else {
                    histogram_wrong.add(distance);
                }
            }
        }
    }
    if counts.total() == 0 {
        return Err(Error::EmptyCorpus);
    }
    Ok(EvalReport {
        metrics: DetectionMetrics::from_counts(&counts),
        counts,
        invalid,
        sa_hits,
        sa: ratio(sa_hits, invalid),
        mrr: if invalid == 0 {
            0.0
        } else {
            reciprocal_sum / invalid as f64
        },
        dropped,
        histogram_all,
        histogram_wrong,
    })
}

const METRIC_KEYS: [&str; 9] = ["r_c", "r_i", "p_c", "p_i", "fm_c", "fm_i", "pa", "sa", "mrr"];

impl EvalReport {
    fn metric_values(&self) -> [f64; 9] {
        let m = &self.metrics;
        [m.r_c, m.r_i, m.p_c, m.p_i, m.fm_c, m.fm_i, m.pa, self.sa, self.mrr]
    }

    /// Human-readable metric table followed by both histograms.
    pub fn to_text(&self) -> String {
        let c = &self.counts;
        let fraction = |n: usize, d: usize| format!("{n}/{d}");
        let m = &self.metrics;
        let rows: [(&str, String, f64); 9] = [
            ("R_c", fraction(c.tp, c.tp + c.fn_), m.r_c),
            ("R_i", fraction(c.tn, c.tn + c.fp), m.r_i),
            ("P_c", fraction(c.tp, c.tp + c.fp), m.p_c),
            ("P_i", fraction(c.tn, c.tn + c.fn_), m.p_i),
            ("Fm_c", format!("{:.4}", m.fm_c), m.fm_c),
            ("Fm_i", format!("{:.4}", m.fm_i), m.fm_i),
            ("PA", fraction(c.tp + c.tn, c.total()), m.pa),
            ("SA", fraction(self.sa_hits, self.invalid), self.sa),
            ("MRR", format!("{:.4}", self.mrr), self.mrr),
        ];
        let mut out = String::new();
        let _ = writeln!(out, "{:<8}{:<16}{:>10}", "Metric", "Ratio", "Percentage");
        for (name, ratio, value) in rows {
            let _ = writeln!(out, "{name:<8}{ratio:<16}{:>9.2}%", value * 100.0);
        }
        let _ = writeln!(
            out,
            "\nTP={} FP={} FN={} TN={} dropped={}",
            c.tp, c.fp, c.fn_, c.tn, self.dropped
        );
        for (title, h) in [
            ("Edit distance of misspellings to their corrections", &self.histogram_all),
            ("Edit distance of misspellings with a wrong top suggestion", &self.histogram_wrong),
        ] {
            let _ = writeln!(out, "\n{title}");
            let _ = writeln!(out, "{:<10}{:>8}{:>12}", "Distance", "Count", "Percentage");
            for (d, n, pct) in h.rows() {
                let _ = writeln!(out, "{d:<10}{n:>8}{pct:>11.2}%");
            }
            let total_pct = if h.is_empty() { 0.0 } else { 100.0 };
            let _ = writeln!(out, "{:<10}{:>8}{:>11.2}%", "Total", h.total(), total_pct);
        }
        out
    }

    /// Flat `key=value` lines, one per field; histogram buckets appear as
    /// `hist_all.<distance>=<count>` and `hist_wrong.<distance>=<count>`.
    pub fn to_structured(&self) -> String {
        let c = &self.counts;
        let mut out = String::new();
        for (k, v) in [
            ("tp", c.tp),
            ("fp", c.fp),
            ("fn", c.fn_),
            ("tn", c.tn),
            ("invalid", self.invalid),
            ("sa_hits", self.sa_hits),
            ("dropped", self.dropped),
        ] {
            let _ = writeln!(out, "{k}={v}");
        }
        for (k, v) in METRIC_KEYS.iter().zip(self.metric_values()) {
            let _ = writeln!(out, "{k}={v}");
        }
        for (prefix, h) in [("hist_all", &self.histogram_all), ("hist_wrong", &self.histogram_wrong)] {
            for (d, n) in &h.buckets {
                let _ = writeln!(out, "{prefix}.{d}={n}");
            }
        }
        out
    }

    /// Inverse of [`EvalReport::to_structured`].
    pub fn from_structured(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::MalformedReport(msg);
        let mut ints: BTreeMap<&str, usize> = BTreeMap::new();
        let mut floats: BTreeMap<&str, f64> = BTreeMap::new();
        let mut histogram_all = Histogram::default();
        let mut histogram_wrong = Histogram::default();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("no '=' in {line:?}")))?;
            let int = || {
                value
                    .parse::<usize>()
                    .map_err(|_| bad(format!("{key}: not a count: {value:?}")))
            };
            if let Some(d) = key.strip_prefix("hist_all.").or(key.strip_prefix("hist_wrong.")) {
                let d: usize = d.parse().map_err(|_| bad(format!("bad bucket {key:?}")))?;
                let h = if key.starts_with("hist_all.") {
                    &mut histogram_all
                } else {
                    &mut histogram_wrong
                };
                h.buckets.insert(d, int()?);
            } else if METRIC_KEYS.contains(&key) {
                let v = value
                    .parse::<f64>()
                    .map_err(|_| bad(format!("{key}: not a number: {value:?}")))?;
                floats.insert(key, v);
            } else if ["tp", "fp", "fn", "tn", "invalid", "sa_hits", "dropped"].contains(&key) {
                ints.insert(key, int()?);
            } else {
                return Err(bad(format!("unknown key {key:?}")));
            }
        }
        let int = |k: &str| ints.get(k).copied().ok_or_else(|| bad(format!("missing {k}")));
        let float = |k: &str| floats.get(k).copied().ok_or_else(|| bad(format!("missing {k}")));
        Ok(EvalReport {
            counts: ConfusionCounts {
                tp: int("tp")?,
                fp: int("fp")?,
                fn_: int("fn")?,
                tn: int("tn")?,
            },
            metrics: DetectionMetrics {
                r_c: float("r_c")?,
                r_i: float("r_i")?,
                p_c: float("p_c")?,
                p_i: float("p_i")?,
                fm_c: float("fm_c")?,
                fm_i: float("fm_i")?,
                pa: float("pa")?,
            },
            invalid: int("invalid")?,
            sa_hits: int("sa_hits")?,
            sa: float("sa")?,
            mrr: float("mrr")?,
            dropped: int("dropped")?,
            histogram_all,
            histogram_wrong,
        })
    }
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
