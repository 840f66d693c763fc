//! Compare weighted and plain edit distance.
//!
//! cargo run --example weighted_distance -- tank tànk

use wolof_spell::{plain_edit_distance, wld, wld_oracle, CostModel};

fn main() {
    let model = CostModel::default();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = match args.as_slice() {
        [a, b] => vec![(a.clone(), b.clone())],
        _ => [("tank", "tànk"), ("deuk", "dëkk"), ("guinaw", "ginnaaw"), ("xam", "qam")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    };
    println!("cheap substitutions:");
    for (a, b, c) in model.substitution_pairs().filter(|(a, b, _)| a < b) {
        println!("  {a} {b} {c}");
    }
    for (a, b) in &pairs {
        let oracle = wld_oracle(a, b, &model).map(|c| c.to_string()).unwrap_or_else(|e| e.to_string());
        println!(
            "{a} / {b}: weighted {} (recursive {oracle}), plain {}",
            wld(a, b, &model),
            plain_edit_distance(a, b)
        );
    }
}
