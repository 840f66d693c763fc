//! Rewrite French-style spellings into the official orthography.
//!
//! cargo run --example transliterate -- mousiba gnopati

use wolof_spell::RuleSet;

fn main() {
    let rules = RuleSet::default();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words = if args.is_empty() {
        ["mousiba", "sakhar", "gnopati", "deuk", "guinaw", "thiossane", "dadialé"].map(String::from).to_vec()
    } else {
        args
    };
    for w in &words {
        println!("{w} -> {}", rules.transform(w));
    }
}
