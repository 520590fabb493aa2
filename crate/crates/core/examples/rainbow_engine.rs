//! The search engine on a hand-made hypergraph: exact value, witness, the
//! partitions for every smaller block count, and resource limits.
//!
//! Run with `cargo run --release --example rainbow_engine`.

use std::time::Duration;

use matroid_hc::catalog::build;
use matroid_hc::hc::{find_rainbow_free_partition, hc, SearchConfig};
use matroid_hc::hypergraph::hamiltonian_view;
use matroid_hc::{ElemSet, Error, Hypergraph};

fn main() -> matroid_hc::Result<()> {
    // tight cycle: the 3-sets of consecutive vertices around a 9-cycle
    let edges = (0..9).map(|i| [i, (i + 1) % 9, (i + 2) % 9].into_iter().collect::<ElemSet>());
    let h = Hypergraph::new(9, edges)?;
    let cfg = SearchConfig::default();
    let out = hc(&h, &cfg)?;
    println!("tight 9-cycle: hc = {}, witness {:?}", out.value, out.witness.as_ref().map(|w| w.blocks()));
    for t in 1..=9 {
        let (p, _) = find_rainbow_free_partition(&h, t, &cfg)?;
        println!("  {t} blocks: {:?}", p.map(|p| p.blocks()));
    }

    let big = hamiltonian_view(&build("pg:3,3")?.matroid)?;
    let capped = SearchConfig { node_limit: 10, ..SearchConfig::default() };
    match hc(&big, &capped) {
        Err(Error::Inconclusive { nodes, best }) => {
            println!("PG(2,3) Hamiltonian, 10 nodes: inconclusive after {nodes}, best {best}")
        }
        other => println!("PG(2,3) Hamiltonian, 10 nodes: {other:?}"),
    }
    let timed = SearchConfig { timeout: Some(Duration::from_secs(5)), threads: 4, ..SearchConfig::default() };
    println!("PG(2,3) Hamiltonian, 4 threads: hc = {}", hc(&big, &timed)?.value);
    Ok(())
}
