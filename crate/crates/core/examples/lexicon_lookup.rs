//! Load a lexicon (the bundled sample unless a path is given) and look words up.
//!
//! cargo run --example lexicon_lookup -- path/to/lexicon.txt dëkk xale

use std::path::Path;

use wolof_spell::TrieDict;

fn main() -> wolof_spell::Result<()> {
    let mut args = std::env::args().skip(1).peekable();
    let dict = match args.peek() {
        Some(p) if Path::new(p).is_file() => TrieDict::load(Path::new(&args.next().unwrap()))?,
        _ => TrieDict::sample(),
    };
    println!("{} words, {} trie nodes", dict.word_count(), dict.node_count());
    let mut words: Vec<String> = args.collect();
    if words.is_empty() {
        words = ["dëkk", "deuk", "ñaar", "Xale"].map(String::from).to_vec();
    }
    for w in &words {
        println!("{w}\t{}", if dict.contains(w) { "found" } else { "missing" });
    }
    let first: Vec<String> = dict.iter().take(8).collect();
    println!("first entries: {}", first.join(" "));
    Ok(())
}
