//! Seeded random matroids for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::field::FiniteField;
use super::geometry::linear_matroid;
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::matroid::Matroid;

/// A sparse paving matroid: a random family of `r`-sets pairwise meeting in at
/// most `r-2` elements is declared the circuit-hyperplanes.
pub fn random_sparse_paving<R: Rng>(n: usize, r: usize, rng: &mut R) -> Result<Matroid> {
    let mut candidates: Vec<ElemSet> = ElemSet::k_subsets(n, r).collect();
    candidates.shuffle(rng);
    let target = rng.random_range(0..=candidates.len().min(6));
    let mut chosen: Vec<ElemSet> = Vec::new();
    for c in candidates {
        if chosen.len() >= target {
            break;
        }
        if r >= 2 && chosen.iter().all(|d| (c & *d).len() + 2 <= r) {
            chosen.push(c);
        }
    }
    let mut circuits = chosen.clone();
    circuits.extend(ElemSet::k_subsets(n, r + 1).filter(|s| !chosen.iter().any(|c| c.is_subset(*s))));
    Matroid::from_circuits(n, &circuits)
}

/// Column matroid of a uniformly random `rows x n` matrix over `GF(q)`.
pub fn random_linear<R: Rng>(n: usize, rows: usize, q: u32, rng: &mut R) -> Result<Matroid> {
    let field = FiniteField::new(q)?;
    let columns = (0..n).map(|_| (0..rows).map(|_| rng.random_range(0..q) as u8).collect()).collect();
    linear_matroid(&field, columns)
}
