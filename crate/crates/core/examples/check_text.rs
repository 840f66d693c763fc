//! Check and auto-correct a sentence.
//!
//! cargo run --example check_text -- "Deuk bi dafa rafet"

use wolof_spell::{SpellChecker, Status, TrieDict};

fn main() -> wolof_spell::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let text = if args.is_empty() {
        "Mousiba bi, deuk bi! Guinaw 2 fan.".to_string()
    } else {
        args.join(" ")
    };
    let checker = SpellChecker::new(TrieDict::sample()).with_k(3);
    let report = checker.check_text(&text)?;
    println!("{text}\n{}", report.corrected_text);
    for r in &report.results {
        match r.status {
            Status::Correct => {}
            Status::Dropped => println!("  {} dropped", r.original),
            _ => {
                let candidates: Vec<String> = r
                    .suggestions
                    .iter()
                    .flat_map(|l| &l.items)
                    .map(|s| format!("{}:{}", s.word, s.cost))
                    .collect();
                println!(
                    "  {} [{}] via {} -> {}",
                    r.original,
                    r.flagged_by.map(|f| f.as_str()).unwrap_or(""),
                    r.transformed.as_deref().unwrap_or(""),
                    candidates.join(" ")
                );
            }
        }
    }
    Ok(())
}
