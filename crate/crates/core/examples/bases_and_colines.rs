//! `hc` of the basis hypergraph equals `n - t2 + 2`, where `t2` is the size of
//! the smallest complement of a coline. Wheels give `2n - 3`.
//!
//! Run with `cargo run --release --example bases_and_colines`.

use matroid_hc::catalog::build;
use matroid_hc::hc::{check_rainbow_free, hc, SearchConfig};
use matroid_hc::hypergraph::bases_view;
use matroid_hc::theorems::{t2, witness_coline_bases_colouring};

fn main() -> matroid_hc::Result<()> {
    for spec in ["pg:3,2", "graph:K4", "graph:K5", "uniform:3,6", "graph:W3", "graph:W4", "graph:W5"] {
        let m = build(spec)?.matroid;
        let h = bases_view(&m)?;
        let out = hc(&h, &SearchConfig::default())?;
        let t = t2(&m)?;
        let largest = m.largest_coline_size()?;
        let certificate = witness_coline_bases_colouring(&m)?;
        assert!(check_rainbow_free(&h, &certificate));
        println!(
            "{spec:<12} n={:<2} r={} largest coline {largest}, t2={t}: hc(B) = {} (formula {}), certificate {} blocks",
            m.n(),
            m.rank(),
            out.value,
            m.n() - t + 2,
            certificate.block_count()
        );
    }
    Ok(())
}
