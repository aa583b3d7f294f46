//! Every strongly stable ideal of colength 39, and the largest tangent
//! space among those without x^3. Takes about half a minute on one core.

use staircase::census::{search_extremes, summarize, SearchOptions};
use staircase::families::lex_truncation_ideal;
use staircase::tangent::tangent_report;

fn main() -> staircase::Result<()> {
    let all = search_extremes(39, &SearchOptions::default())?;
    let without_x3: Vec<_> = all.iter().filter(|r| r.min_x_power > 3).cloned().collect();
    let s = summarize(&without_x3);
    println!("strongly stable ideals: {}", all.len());
    println!("without x^3: {}", s.count);
    println!("largest tangent space: {} at", s.max_total);
    for ideal in &s.argmax {
        println!("  ({ideal})");
    }
    println!("dim T(E(39)) = {}", tangent_report(&lex_truncation_ideal(39)?)?.total);
    Ok(())
}
