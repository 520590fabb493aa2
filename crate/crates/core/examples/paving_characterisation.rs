//! A matroid is paving exactly when `hc(B(M)) = r`. Non-paving matroids get a
//! colouring with `r` blocks that avoids rainbow bases.
//!
//! Run with `cargo run --release --example paving_characterisation`.

use matroid_hc::constructions::random::{random_linear, random_sparse_paving};
use matroid_hc::hc::{check_rainbow_free, hc, SearchConfig};
use matroid_hc::hypergraph::bases_view;
use matroid_hc::theorems::witness_nonpaving_bases_colouring;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> matroid_hc::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..12 {
        let m = if i % 2 == 0 {
            random_sparse_paving(8, 3, &mut rng)?
        } else {
            random_linear(8, 3, 2, &mut rng)?
        };
        if m.rank() == 0 {
            continue;
        }
        let h = bases_view(&m)?;
        let value = hc(&h, &SearchConfig::default())?.value.value().expect("bases exist");
        let smallest_circuit = m.circuits().iter().map(|c| c.len()).min().unwrap_or(0);
        let extra = if m.is_paving() {
            String::new()
        } else {
            let w = witness_nonpaving_bases_colouring(&m)?;
            assert!(check_rainbow_free(&h, &w));
            format!(", certificate with {} blocks", w.block_count())
        };
        println!(
            "#{i:<2} r={} smallest circuit {smallest_circuit}: paving={:<5} hc(B)={value}{extra}",
            m.rank(),
            m.is_paving()
        );
        assert_eq!(value == m.rank(), m.is_paving());
    }
    Ok(())
}
