//! Score the checker on a labeled corpus (the bundled sample by default).
//!
//! cargo run --example evaluate_corpus -- corpus.tsv

use std::path::Path;

use wolof_spell::eval::{evaluate, load_corpus, parse_corpus};
use wolof_spell::{SpellChecker, TrieDict};

const SAMPLE: &str = include_str!("../data/sample_corpus.tsv");

fn main() -> wolof_spell::Result<()> {
    let corpus = match std::env::args().nth(1) {
        Some(p) => load_corpus(Path::new(&p))?,
        None => parse_corpus(SAMPLE)?,
    };
    let checker = SpellChecker::new(TrieDict::sample());
    let report = evaluate(&corpus, &checker)?;
    print!("{}", report.to_text());
    Ok(())
}
