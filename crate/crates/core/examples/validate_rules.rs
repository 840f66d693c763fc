//! Run the phonotactic rules over a few words.
//!
//! cargo run --example validate_rules -- kkaar saakk dëkk

use wolof_spell::validate;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words = if args.is_empty() {
        ["dëkk", "ppa", "saakk", "kkaatt", "thiossane", "jaambur"].map(String::from).to_vec()
    } else {
        args
    };
    for word in &words {
        let verdict = validate(word);
        if verdict.valid {
            println!("{word}: ok");
            continue;
        }
        let found: Vec<String> = verdict
            .violations
            .iter()
            .map(|v| format!("{}@{}", v.rule.as_str(), v.index))
            .collect();
        println!("{word}: {}", found.join(", "));
    }
}
