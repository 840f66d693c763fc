//! Split words into Wolof graphemes and list every admissible reading.
//!
//! cargo run --example segment_words -- mbokk ndaw jaambur

use wolof_spell::alphabet::{segment, segmentations};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words = if args.is_empty() {
        vec!["dëkk".to_string(), "mbokk".into(), "jaambur".into(), "thiossane".into()]
    } else {
        args
    };
    for word in &words {
        match segment(word) {
            Ok(gs) => {
                let parts: Vec<String> = gs.iter().map(|g| format!("{}({})", g.text, g.class.name())).collect();
                println!("{word}: {}", parts.join(" "));
                for reading in segmentations(word).unwrap_or_default() {
                    let texts: Vec<&str> = reading.iter().map(|g| g.text.as_str()).collect();
                    println!("    {}", texts.join("|"));
                }
            }
            Err(e) => println!("{word}: {e}"),
        }
    }
}
