//! The Wolof lexicon, stored as a character trie.
//!
//! Keys are Unicode scalars. The root node stands for the empty string; a
//! word is a member iff walking its scalars from the root ends on a
//! terminal node.

use std::path::Path;

use crate::error::{read_file, Error, Result};
use crate::preprocess::normalize;

/// Sample lexicon shipped with the crate.
pub const SAMPLE_LEXICON: &str = include_str!("../data/sample_lexicon.txt");

pub(crate) type NodeId = u32;
pub(crate) const ROOT: NodeId = 0;

#[derive(Debug, Clone, Default)]
pub(crate) struct Node {
    /// Sorted by scalar so traversal is lexicographic.
    pub(crate) children: Vec<(char, NodeId)>,
    pub(crate) terminal: bool,
}

#[derive(Debug, Clone)]
pub struct TrieDict {
    nodes: Vec<Node>,
    word_count: usize,
}

impl Default for TrieDict {
    fn default() -> Self {
        TrieDict {
            nodes: vec![Node::default()],
            word_count: 0,
        }
    }
}

impl TrieDict {
    /// Builds a dictionary from already normalized words. Duplicates
    /// collapse.
    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut dict = TrieDict::default();
        for w in words {
            dict.insert(w.as_ref());
        }
        dict
    }

    /// Parses lexicon text: one word per line, LF or CRLF, surrounding
    /// whitespace trimmed, `#` comment lines and blank lines skipped. Each
    /// word is normalized (NFC, lowercase) before insertion.
    pub fn parse(text: &str) -> Result<Self> {
        let mut dict = TrieDict::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |reason: &str| Error::MalformedLexicon {
                line: i + 1,
                reason: format!("{reason} in {line:?}"),
            };
            if line.chars().any(char::is_whitespace) {
                return Err(malformed("whitespace inside word"));
            }
            if line.chars().any(char::is_numeric) {
                return Err(malformed("digit"));
            }
            dict.insert(&normalize(line));
        }
        Ok(dict)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&read_file(path)?)
    }

    /// The bundled sample lexicon.
    pub fn sample() -> Self {
        Self::parse(SAMPLE_LEXICON).expect("bundled lexicon is well formed")
    }

    /// Inserts `word`, returning false when it was already present. Empty
    /// words are ignored.
    fn insert(&mut self, word: &str) -> bool {
        if word.is_empty() {
            return false;
        }
        let mut node = ROOT;
        for c in word.chars() {
            node = match self.child(node, c) {
                Some(next) => next,
                None => {
                    let next = self.nodes.len() as NodeId;
                    self.nodes.push(Node::default());
                    let children = &mut self.nodes[node as usize].children;
                    let at = children.partition_point(|&(k, _)| k < c);
                    children.insert(at, (c, next));
                    next
                }
            };
        }
        let terminal = &mut self.nodes[node as usize].terminal;
        if *terminal {
            return false;
        }
        *terminal = true;
        self.word_count += 1;
        true
    }

    pub(crate) fn child(&self, node: NodeId, c: char) -> Option<NodeId> {
        let children = &self.nodes[node as usize].children;
        children
            .binary_search_by(|&(k, _)| k.cmp(&c))
            .ok()
            .map(|i| children[i].1)
    }

    pub(crate) fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id as usize]
    }

    pub fn contains(&self, word: &str) -> bool {
        let mut node = ROOT;
        for c in word.chars() {
            match self.child(node, c) {
                Some(next) => node = next,
                None => return false,
            }
        }
        self.nodes[node as usize].terminal
    }

    pub fn word_count(&self) -> usize {
        self.word_count
    }

    pub fn is_empty(&self) -> bool {
        self.word_count == 0
    }

    /// Number of trie nodes, root included.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Every stored word once, in lexicographic scalar order.
    pub fn iter(&self) -> Words<'_> {
        Words {
            dict: self,
            stack: vec![(ROOT, 0, 0)],
            prefix: String::new(),
        }
    }
}

/// Depth-first preorder walk over the trie.
pub struct Words<'a> {
    dict: &'a TrieDict,
    /// (node, next child index, prefix length in bytes at this node)
    stack: Vec<(NodeId, usize, usize)>,
    prefix: String,
}

impl Iterator for Words<'_> {
    type Item = String;

    fn next(&mut self) -> Option<String> {
        loop {
            let (node, next_child, len) = self.stack.last_mut()?;
            let (node, len) = (*node, *len);
            let children = &self.dict.nodes[node as usize].children;
            if *next_child < children.len() {
                let (c, child) = children[*next_child];
                *next_child += 1;
                self.prefix.truncate(len);
                self.prefix.push(c);
                self.stack.push((child, 0, self.prefix.len()));
                if self.dict.nodes[child as usize].terminal {
                    return Some(self.prefix.clone());
                }
            } else {
                self.stack.pop();
            }
        }
    }
}

impl<'a> IntoIterator for &'a TrieDict {
    type Item = String;
    type IntoIter = Words<'a>;

    fn into_iter(self) -> Words<'a> {
        self.iter()
    }
}
