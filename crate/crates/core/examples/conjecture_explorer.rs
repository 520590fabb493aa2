//! Compares the conjectured `hc` of the `p`-circuit hypergraph of `PG(r-1, q)`
//! with the exact value and with an explicit lower-bound colouring.
//!
//! Run with `cargo run --release --example conjecture_explorer`.

use matroid_hc::hc::SearchConfig;
use matroid_hc::theorems::explore_cp_conjecture;

fn main() -> matroid_hc::Result<()> {
    let cfg = SearchConfig::default();
    for (p, r, q) in [(3, 3, 2), (4, 3, 2), (3, 4, 2), (4, 4, 2), (3, 3, 3), (4, 3, 3)] {
        let rep = explore_cp_conjecture(p, r, q, &cfg)?;
        println!("{rep}\n");
    }
    Ok(())
}
