//! Correction candidates ranked by weighted edit cost.
//!
//! The search walks the lexicon trie depth-first, carrying one DP row per
//! node (row length `|query| + 1`), so words sharing a prefix share its
//! rows. A node's row minimum is a lower bound on the cost of every word
//! below it because all edit costs are non-negative. A subtree is abandoned
//! when that bound exceeds `max_cost`, or when `k` candidates are already
//! held and the bound is not below the worst of them: the walk visits words
//! in lexicographic order, so a later word of equal cost would lose the
//! tie anyway.

use std::collections::BinaryHeap;

use crate::distance::{first_row, next_row, Cost, CostModel};
use crate::error::{Error, Result};
use crate::lexicon::{NodeId, TrieDict, ROOT};

pub const DEFAULT_K: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Suggestion {
    pub cost: Cost,
    pub word: String,
}

/// Ranked candidates, ascending by (cost, word).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuggestionList {
    pub query: String,
    pub items: Vec<Suggestion>,
}

impl SuggestionList {
    pub fn first(&self) -> Option<&Suggestion> {
        self.items.first()
    }

    /// 1-based rank of `word`, if listed.
    pub fn rank_of(&self, word: &str) -> Option<usize> {
        self.items.iter().position(|s| s.word == word).map(|i| i + 1)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub k: usize,
    pub max_cost: Option<Cost>,
    /// Branch-and-bound. Turning it off visits every trie node; the result
    /// is the same.
    pub pruning: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            k: DEFAULT_K,
            max_cost: None,
            pruning: true,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Trie nodes whose DP row was computed.
    pub nodes_expanded: usize,
}

/// The `k` lexicon words closest to `query`, ties broken lexicographically.
pub fn suggest(
    query: &str,
    dict: &TrieDict,
    model: &CostModel,
    k: usize,
    max_cost: Option<Cost>,
) -> Result<SuggestionList> {
    let opts = SearchOptions {
        k,
        max_cost,
        pruning: true,
    };
    suggest_with_stats(query, dict, model, &opts).map(|(list, _)| list)
}

/// The single closest word.
pub fn best(query: &str, dict: &TrieDict, model: &CostModel) -> Result<Suggestion> {
    let list = suggest(query, dict, model, 1, None)?;
    Ok(list
        .items
        .into_iter()
        .next()
        .expect("a non-empty lexicon always yields a candidate without a cost bound"))
}

pub fn suggest_with_stats(
    query: &str,
    dict: &TrieDict,
    model: &CostModel,
    opts: &SearchOptions,
) -> Result<(SuggestionList, SearchStats)> {
    if dict.is_empty() {
        return Err(Error::EmptyLexicon);
    }
    if opts.k == 0 {
        return Err(Error::Config("suggestion depth k must be at least 1".into()));
    }
    let query_chars: Vec<char> = query.chars().collect();
    let root_row = first_row(&query_chars, model);
    let mut walk = Walk {
        dict,
        model,
        query: &query_chars,
        opts,
        heap: BinaryHeap::with_capacity(opts.k + 1),
        rows: vec![root_row],
        prefix: String::new(),
        stats: SearchStats::default(),
    };
    // The empty word is never a member, so only the root's children matter.
    walk.visit_children(ROOT, 0);
    let mut items = walk.heap.into_vec();
    items.sort();
    Ok((
        SuggestionList {
            query: query.to_string(),
            items,
        },
        walk.stats,
    ))
}

struct Walk<'a> {
    dict: &'a TrieDict,
    model: &'a CostModel,
    query: &'a [char],
    opts: &'a SearchOptions,
    /// Max-heap on (cost, word): the top is the current k-th best.
    heap: BinaryHeap<Suggestion>,
    /// rows[d] is the DP row for the current prefix of length d.
    rows: Vec<Vec<Cost>>,
    prefix: String,
    stats: SearchStats,
}

impl Walk<'_> {
    fn full(&self) -> bool {
        self.heap.len() >= self.opts.k
    }

    fn worst_cost(&self) -> Option<Cost> {
        self.heap.peek().map(|s| s.cost)
    }

    fn visit_children(&mut self, node: NodeId, depth: usize) {
        let dict = self.dict;
        for &(c, child) in &dict.node(node).children {
            if self.rows.len() <= depth + 1 {
                self.rows.push(vec![0; self.query.len() + 1]);
            }
            let (done, rest) = self.rows.split_at_mut(depth + 1);
            next_row(self.query, c, &done[depth], &mut rest[0], self.model);
            self.stats.nodes_expanded += 1;

            let row = &self.rows[depth + 1];
            let cost = row[self.query.len()];
            let lower_bound = row.iter().copied().min().unwrap_or(cost);

            self.prefix.push(c);
            if dict.node(child).terminal {
                self.offer(cost);
            }
            if !self.opts.pruning || !self.abandon(lower_bound) {
                self.visit_children(child, depth + 1);
            }
            self.prefix.pop();
        }
    }

    fn offer(&mut self, cost: Cost) {
        if self.opts.max_cost.is_some_and(|m| cost > m) {
            return;
        }
        // Equal cost loses: every held word precedes this one.
        if self.full() && self.worst_cost().is_some_and(|w| cost >= w) {
            return;
        }
        self.heap.push(Suggestion {
            cost,
            word: self.prefix.clone(),
        });
        if self.heap.len() > self.opts.k {
            self.heap.pop();
        }
    }

    fn abandon(&self, lower_bound: Cost) -> bool {
        if self.opts.max_cost.is_some_and(|m| lower_bound > m) {
            return true;
        }
        self.full() && self.worst_cost().is_some_and(|w| lower_bound >= w)
    }
}
