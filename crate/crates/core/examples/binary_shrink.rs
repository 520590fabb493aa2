//! In a simple binary matroid coloured with `r + 1` colours, a rainbow
//! Hamiltonian circuit can always be shrunk to a smaller rainbow circuit.
//!
//! Run with `cargo run --release --example binary_shrink`.

use matroid_hc::constructions::{projective_geometry, FiniteField};
use matroid_hc::theorems::{random_shrink_instance, shrink_rainbow_circuit};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> matroid_hc::Result<()> {
    let gf2 = FiniteField::new(2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for r in [3, 4] {
        let m = projective_geometry(r, &gf2)?;
        println!("PG({}, 2):", r - 1);
        for _ in 0..4 {
            let (partition, c) = random_shrink_instance(&m, &mut rng)?;
            let d = shrink_rainbow_circuit(&m, &partition, c)?;
            let colours: Vec<usize> = d.iter().map(|e| partition.block_of(e)).collect();
            println!("  rainbow {c} -> {d} with colours {colours:?}");
        }
    }
    Ok(())
}
