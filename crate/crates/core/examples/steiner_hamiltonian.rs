//! Hamiltonian circuits of Steiner-system matroids: when they exist, and the
//! `hc` of the hypergraph they form compared with `q + 2`, where `q` is the
//! largest hyperplane size.
//!
//! Run with `cargo run --release --example steiner_hamiltonian`.

use matroid_hc::constructions::{
    steiner_hamiltonicity_bound, steiner_matroid, SteinerSystem, BUILTIN_STEINER,
};
use matroid_hc::hc::{check_rainbow_free, hc, SearchConfig};
use matroid_hc::hypergraph::hamiltonian_view;
use matroid_hc::theorems::{largest_hyperplane, witness_hyperplane_hc_colouring};

fn main() -> matroid_hc::Result<()> {
    for name in BUILTIN_STEINER {
        let s = SteinerSystem::builtin(name)?;
        let m = steiner_matroid(&s)?;
        let bound = steiner_hamiltonicity_bound(s.t(), s.k(), s.n())?;
        let h = hamiltonian_view(&m)?;
        print!("{name}: rank {}, {} blocks, size bound met: {bound:<5}", m.rank(), s.blocks().len());
        if h.is_empty() {
            println!(" no Hamiltonian circuits");
            continue;
        }
        let q = largest_hyperplane(&m).expect("rank >= 1").0;
        let out = hc(&h, &SearchConfig::default())?;
        let w = witness_hyperplane_hc_colouring(&m)?;
        assert!(check_rainbow_free(&h, &w));
        println!(" {} Hamiltonian circuits, hc = {}, q + 2 = {}", h.edges().len(), out.value, q + 2);
    }
    Ok(())
}
