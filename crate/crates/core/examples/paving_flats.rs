//! For a paving matroid of rank `r` and `p < r - 1`, the hypergraph of
//! `p`-element rank-`p` flats has `hc = p`.
//!
//! Run with `cargo run --release --example paving_flats`.

use matroid_hc::catalog::build;
use matroid_hc::hc::{hc, SearchConfig};
use matroid_hc::hypergraph::p_flats_view;

fn main() -> matroid_hc::Result<()> {
    for spec in ["steiner:S(3,4,8)", "uniform:4,7", "uniform:5,7", "pg:3,2"] {
        let m = build(spec)?.matroid;
        assert!(m.is_paving());
        for p in 1..m.rank() - 1 {
            let h = p_flats_view(&m, p)?;
            if h.is_empty() {
                println!("{spec} p={p}: no such flats");
                continue;
            }
            println!(
                "{spec} p={p}: {} flats, hc = {}",
                h.edges().len(),
                hc(&h, &SearchConfig::default())?.value
            );
        }
    }
    Ok(())
}
