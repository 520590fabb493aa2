//! `hc` of the 3-circuit hypergraph of small projective geometries.
//!
//! Run with `cargo run --release --example projective_small_circuits`.

use std::time::Instant;

use matroid_hc::constructions::{projective_geometry, FiniteField};
use matroid_hc::hc::{check_rainbow_free, hc, SearchConfig};
use matroid_hc::hypergraph::p_circuits_view;

fn main() -> matroid_hc::Result<()> {
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    for (r, q) in [(3, 2), (3, 3), (4, 2)] {
        let m = projective_geometry(r, &FiniteField::new(q)?)?;
        let h = p_circuits_view(&m, 3)?;
        let start = Instant::now();
        let out = hc(&h, &SearchConfig::with_threads(threads))?;
        let witness = out.witness.as_ref().expect("3-circuits exist");
        assert!(check_rainbow_free(&h, witness));
        println!(
            "PG({}, {q}): {} points, {} lines, hc = {} (expected {}), {} nodes, {:.2?}",
            r - 1,
            m.n(),
            h.edges().len(),
            out.value,
            r + 1,
            out.stats.nodes,
            start.elapsed()
        );
    }
    Ok(())
}
