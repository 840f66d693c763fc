//! Weighted Levenshtein distance.
//!
//! Edits are insertion, deletion and substitution of single Unicode scalars.
//! Costs are small non-negative integers so that totals, and therefore
//! ranking ties, are exact.

use std::path::Path;

use crate::error::{read_file, Error, Result};

pub type Cost = u32;

/// Substitution cost table shipped with the crate.
pub const DEFAULT_COSTS: &str = include_str!("../data/costs.tsv");

/// Longest input accepted by [`wld_oracle`].
pub const ORACLE_MAX_LEN: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostModel {
    insert_default: Cost,
    delete_default: Cost,
    substitute_default: Cost,
    /// Per-scalar overrides, sorted by scalar.
    insert_overrides: Vec<(char, Cost)>,
    delete_overrides: Vec<(char, Cost)>,
    /// Unordered pairs stored in both orientations, sorted by key.
    substitute_overrides: Vec<(u64, Cost)>,
    /// Substitution costs for Latin-1 pairs, mirroring the fields above.
    latin1: Latin1Table,
}

/// Marks a Latin-1 entry whose cost does not fit in a byte.
const SPILL: u8 = u8::MAX;

#[derive(Clone, PartialEq, Eq)]
struct Latin1Table(Box<[u8]>);

impl Latin1Table {
    fn new(default: Cost) -> Self {
        let fill = u8::try_from(default).unwrap_or(SPILL);
        let mut table = vec![fill; 1 << 16].into_boxed_slice();
        for c in 0..256 {
            table[c << 8 | c] = 0;
        }
        Latin1Table(table)
    }

    fn index(a: char, b: char) -> Option<usize> {
        let (a, b) = (a as usize, b as usize);
        (a < 256 && b < 256).then_some(a << 8 | b)
    }

    fn set(&mut self, a: char, b: char, cost: Cost) {
        if let Some(i) = Self::index(a, b) {
            self.0[i] = u8::try_from(cost).unwrap_or(SPILL);
        }
    }
}

impl std::fmt::Debug for Latin1Table {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Latin1Table")
    }
}

fn pair_key(a: char, b: char) -> u64 {
    (u64::from(a as u32) << 32) | u64::from(b as u32)
}

fn lookup<K: Ord + Copy>(table: &[(K, Cost)], key: K) -> Option<Cost> {
    table
        .binary_search_by(|&(k, _)| k.cmp(&key))
        .ok()
        .map(|i| table[i].1)
}

fn upsert<K: Ord + Copy>(table: &mut Vec<(K, Cost)>, key: K, cost: Cost) {
    match table.binary_search_by(|&(k, _)| k.cmp(&key)) {
        Ok(i) => table[i].1 = cost,
        Err(i) => table.insert(i, (key, cost)),
    }
}

impl Default for CostModel {
    /// Unit insertion and deletion; the bundled substitution table, with
    /// every other unequal pair at 2.
    fn default() -> Self {
        Self::parse(DEFAULT_COSTS).expect("bundled cost table is well formed")
    }
}

impl CostModel {
    /// Every unequal pair at `substitute_default`, no overrides.
    pub fn uniform(insert: Cost, delete: Cost, substitute_default: Cost) -> Self {
        CostModel {
            insert_default: insert,
            delete_default: delete,
            substitute_default,
            insert_overrides: Vec::new(),
            delete_overrides: Vec::new(),
            substitute_overrides: Vec::new(),
            latin1: Latin1Table::new(substitute_default),
        }
    }

    /// Classic Levenshtein: every edit costs 1.
    pub fn unit() -> Self {
        Self::uniform(1, 1, 1)
    }

    /// Sets the cost of substituting `a` for `b` and `b` for `a`. Identical
    /// scalars always substitute for free, so `a == b` is ignored.
    pub fn with_substitution(mut self, a: char, b: char, cost: Cost) -> Self {
        if a != b {
            upsert(&mut self.substitute_overrides, pair_key(a, b), cost);
            upsert(&mut self.substitute_overrides, pair_key(b, a), cost);
            self.latin1.set(a, b, cost);
            self.latin1.set(b, a, cost);
        }
        self
    }

    pub fn with_insertion(mut self, c: char, cost: Cost) -> Self {
        upsert(&mut self.insert_overrides, c, cost);
        self
    }

    pub fn with_deletion(mut self, c: char, cost: Cost) -> Self {
        upsert(&mut self.delete_overrides, c, cost);
        self
    }

    /// Cost table TSV: `char1<TAB>char2<TAB>cost` per line, `#` comments.
    /// Unlisted unequal pairs cost 2; insertion and deletion cost 1.
    pub fn parse(text: &str) -> Result<Self> {
        let mut model = Self::uniform(1, 1, 2);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let malformed = |reason: String| Error::MalformedCosts {
                line: i + 1,
                reason,
            };
            let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
            let [a, b, cost] = cols[..] else {
                return Err(malformed(format!(
                    "expected 3 tab-separated columns, found {}",
                    cols.len()
                )));
            };
            let single = |s: &str| {
                let mut it = s.chars();
                match (it.next(), it.next()) {
                    (Some(c), None) => Ok(c),
                    _ => Err(malformed(format!("{s:?} is not a single scalar"))),
                }
            };
            let (a, b) = (single(a)?, single(b)?);
            let cost: Cost = cost
                .parse()
                .map_err(|_| malformed(format!("bad cost {cost:?}")))?;
            if a == b && cost != 0 {
                return Err(malformed(format!("identical pair {a:?} must cost 0")));
            }
            model = model.with_substitution(a, b, cost);
        }
        Ok(model)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&read_file(path)?)
    }

    #[inline]
    pub fn insert_cost(&self, c: char) -> Cost {
        if self.insert_overrides.is_empty() {
            return self.insert_default;
        }
        lookup(&self.insert_overrides, c).unwrap_or(self.insert_default)
    }

    #[inline]
    pub fn delete_cost(&self, c: char) -> Cost {
        if self.delete_overrides.is_empty() {
            return self.delete_default;
        }
        lookup(&self.delete_overrides, c).unwrap_or(self.delete_default)
    }

    #[inline]
    pub fn substitute_cost(&self, a: char, b: char) -> Cost {
        if let Some(i) = Latin1Table::index(a, b) {
            let c = self.latin1.0[i];
            if c != SPILL {
                return Cost::from(c);
            }
        }
        if a == b {
            return 0;
        }
        lookup(&self.substitute_overrides, pair_key(a, b)).unwrap_or(self.substitute_default)
    }

    /// Listed substitution pairs, each orientation once.
    pub fn substitution_pairs(&self) -> impl Iterator<Item = (char, char, Cost)> + '_ {
        self.substitute_overrides.iter().map(|&(k, c)| {
            let a = char::from_u32((k >> 32) as u32).expect("valid scalar");
            let b = char::from_u32(k as u32).expect("valid scalar");
            (a, b, c)
        })
    }
}

/// Advances one DP row: `prev` holds costs of turning every prefix of
/// `source` into the target prefix `t[..j-1]`; `next` receives the row for
/// `t[..j]` where `t[j-1] == target_char`.
#[inline]
pub(crate) fn next_row(
    source: &[char],
    target_char: char,
    prev: &[Cost],
    next: &mut [Cost],
    model: &CostModel,
) {
    debug_assert_eq!(prev.len(), source.len() + 1);
    debug_assert_eq!(next.len(), source.len() + 1);
    let insert_cost = model.insert_cost(target_char);
    next[0] = prev[0] + insert_cost;
    for (i, &s) in source.iter().enumerate() {
        let delete = next[i] + model.delete_cost(s);
        let insert = prev[i + 1] + insert_cost;
        let substitute = prev[i] + model.substitute_cost(s, target_char);
        next[i + 1] = delete.min(insert).min(substitute);
    }
}

/// First DP row: cost of deleting each prefix of `source`.
pub(crate) fn first_row(source: &[char], model: &CostModel) -> Vec<Cost> {
    let mut row = Vec::with_capacity(source.len() + 1);
    row.push(0);
    let mut acc = 0;
    for &s in source {
        acc += model.delete_cost(s);
        row.push(acc);
    }
    row
}

/// Weighted distance over scalar slices.
pub fn wld_scalars(source: &[char], target: &[char], model: &CostModel) -> Cost {
    const STACK: usize = 16;
    let width = source.len() + 1;
    if width > STACK {
        let mut prev = first_row(source, model);
        let mut next = vec![0; width];
        return rows_to_end(source, target, &mut prev, &mut next, model);
    }
    let mut buf = [0; 2 * STACK];
    let (prev, next) = buf.split_at_mut(STACK);
    let (prev, next) = (&mut prev[..width], &mut next[..width]);
    let mut acc = 0;
    for (i, &s) in source.iter().enumerate() {
        acc += model.delete_cost(s);
        prev[i + 1] = acc;
    }
    rows_to_end(source, target, prev, next, model)
}

fn rows_to_end<'a>(
    source: &[char],
    target: &[char],
    mut prev: &'a mut [Cost],
    mut next: &'a mut [Cost],
    model: &CostModel,
) -> Cost {
    for &t in target {
        next_row(source, t, prev, next, model);
        std::mem::swap(&mut prev, &mut next);
    }
    prev[source.len()]
}

/// Minimum total cost of turning `w1` into `w2` with insertions, deletions
/// and substitutions under `model`. O(|w1|·|w2|) time, O(|w1|) space.
pub fn wld(w1: &str, w2: &str, model: &CostModel) -> Cost {
    let a: Vec<char> = w1.chars().collect();
    let b: Vec<char> = w2.chars().collect();
    wld_scalars(&a, &b, model)
}

/// Unit-cost Levenshtein distance.
pub fn plain_edit_distance(w1: &str, w2: &str) -> usize {
    let a: Vec<char> = w1.chars().collect();
    let b: Vec<char> = w2.chars().collect();
    wld_scalars(&a, &b, &CostModel::unit()) as usize
}

/// The recurrence evaluated top-down from the full pair, memoizing each
/// (prefix of `w1`, prefix of `w2`) subproblem. Empty-prefix base cases sum
/// the per-scalar deletion or insertion costs. Inputs are limited to
/// [`ORACLE_MAX_LEN`] scalars each.
pub fn wld_oracle(w1: &str, w2: &str, model: &CostModel) -> Result<Cost> {
    let a: Vec<char> = w1.chars().collect();
    let b: Vec<char> = w2.chars().collect();
    wld_oracle_scalars(&a, &b, model)
}

pub fn wld_oracle_scalars(a: &[char], b: &[char], model: &CostModel) -> Result<Cost> {
    let len = a.len().max(b.len());
    if len > ORACLE_MAX_LEN {
        return Err(Error::InputTooLong {
            len,
            max: ORACLE_MAX_LEN,
        });
    }
    // Short inputs get a smaller table to fill.
    if (a.len() + 1) * (b.len() + 1) <= SMALL_MEMO {
        Ok(Oracle::<SMALL_MEMO>::new(a, b, model).solve())
    } else {
        Ok(Oracle::<FULL_MEMO>::new(a, b, model).solve())
    }
}

const UNSOLVED: Cost = Cost::MAX;
const SMALL_MEMO: usize = 36;
const FULL_MEMO: usize = (ORACLE_MAX_LEN + 1) * (ORACLE_MAX_LEN + 1);

struct Oracle<'a, const N: usize> {
    a: &'a [char],
    b: &'a [char],
    model: &'a CostModel,
    width: usize,
    memo: [Cost; N],
}

impl<'a, const N: usize> Oracle<'a, N> {
    fn new(a: &'a [char], b: &'a [char], model: &'a CostModel) -> Self {
        let width = b.len() + 1;
        let mut memo = [UNSOLVED; N];
        // Empty-prefix base cases: insert all of b[..j], or delete all of a[..i].
        let mut acc = 0;
        memo[0] = 0;
        for (j, &c) in b.iter().enumerate() {
            acc += model.insert_cost(c);
            memo[j + 1] = acc;
        }
        acc = 0;
        for (i, &c) in a.iter().enumerate() {
            acc += model.delete_cost(c);
            memo[(i + 1) * width] = acc;
        }
        Oracle { a, b, model, width, memo }
    }

    fn solve(&mut self) -> Cost {
        self.cost(self.a.len(), self.b.len())
    }

    #[inline(always)]
    fn cost(&mut self, i: usize, j: usize) -> Cost {
        match self.memo[i * self.width + j] {
            UNSOLVED => self.recurse(i, j),
            c => c,
        }
    }

    /// Cost of turning a[..i] into b[..j], both non-empty.
    fn recurse(&mut self, i: usize, j: usize) -> Cost {
        let (x, y) = (self.a[i - 1], self.b[j - 1]);
        let delete = self.cost(i - 1, j) + self.model.delete_cost(x);
        let insert = self.cost(i, j - 1) + self.model.insert_cost(y);
        let substitute = self.cost(i - 1, j - 1) + self.model.substitute_cost(x, y);
        let cost = delete.min(insert).min(substitute);
        self.memo[i * self.width + j] = cost;
        cost
    }
}
