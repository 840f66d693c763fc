//! Rank lexicon words by distance to a query, with and without pruning.
//!
//! cargo run --example suggest_corrections -- ginaw 5

use wolof_spell::suggest::{suggest_with_stats, SearchOptions};
use wolof_spell::{CostModel, TrieDict};

fn main() -> wolof_spell::Result<()> {
    let mut args = std::env::args().skip(1);
    let query = args.next().unwrap_or_else(|| "ginaw".into());
    let k = args.next().and_then(|k| k.parse().ok()).unwrap_or(5);
    let dict = TrieDict::sample();
    let model = CostModel::default();
    let on = SearchOptions { k, max_cost: None, pruning: true };
    let off = SearchOptions { pruning: false, ..on };
    let (list, stats) = suggest_with_stats(&query, &dict, &model, &on)?;
    let (_, full) = suggest_with_stats(&query, &dict, &model, &off)?;
    for (rank, s) in list.items.iter().enumerate() {
        println!("{}. {} ({})", rank + 1, s.word, s.cost);
    }
    println!("nodes expanded: {} pruned, {} exhaustive", stats.nodes_expanded, full.nodes_expanded);
    Ok(())
}
