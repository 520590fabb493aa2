//! `hc` of the circuit and cocircuit hypergraphs across the standard zoo,
//! with the colouring that certifies each lower bound.
//!
//! Run with `cargo run --release --example circuits_and_cocircuits`.

use matroid_hc::catalog::zoo;
use matroid_hc::hc::{check_rainbow_free, hc, SearchConfig};
use matroid_hc::hypergraph::{circuits_view, cocircuits_view};
use matroid_hc::theorems::witness_circuit_colouring;

fn main() -> matroid_hc::Result<()> {
    let cfg = SearchConfig::default();
    println!(
        "{:<18} {:>3} {:>3} {:>6} {:>5} {:>7} {:>6}",
        "matroid", "n", "r", "hc(C)", "r+1", "hc(C*)", "n-r+1"
    );
    for inst in zoo()? {
        let m = &inst.matroid;
        let circuits = circuits_view(m)?;
        let cocircuits = cocircuits_view(m)?;
        let c = hc(&circuits, &cfg)?.value.to_string();
        let d = hc(&cocircuits, &cfg)?.value.to_string();
        // r blocks, none containing a whole circuit in rainbow form
        let certificate = witness_circuit_colouring(m)?;
        assert!(check_rainbow_free(&circuits, &certificate) && certificate.block_count() == m.rank());
        println!(
            "{:<18} {:>3} {:>3} {:>6} {:>5} {:>7} {:>6}",
            inst.label,
            m.n(),
            m.rank(),
            c,
            m.rank() + 1,
            d,
            m.n() - m.rank() + 1
        );
    }
    Ok(())
}
