//! Matroid families: uniform, graphic, projective and affine geometries,
//! Steiner-system paving matroids.

mod field;
mod geometry;
mod graph;
pub mod random;
mod steiner;

use std::sync::Arc;

pub use field::FiniteField;
pub use geometry::{
    affine_geometry, linear_matroid, projective_geometry, projective_point_count, projective_points,
    LinearOracle,
};
pub use graph::{complete_graph, cycle_graph, graphic, wheel, GraphSpec};
pub use steiner::{steiner_hamiltonicity_bound, steiner_matroid, SteinerSystem, BUILTIN_STEINER};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, UniformOracle};

/// `U_{r,n}`.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if r > n {
        return Err(Error::InvalidRank { rank: r, n });
    }
    Matroid::from_oracle(n, Arc::new(UniformOracle { rank: r }))
}

#[cfg(test)]
mod tests {
    use super::random::{random_linear, random_sparse_paving};
    use super::*;
    use crate::elemset::ElemSet;

    #[test]
    fn uniform_examples() {
        assert!(uniform(4, 4).unwrap().circuits().is_empty());
        let zero = uniform(0, 3).unwrap();
        assert_eq!(zero.loops(), ElemSet::full(3));
        assert_eq!(uniform(2, 4).unwrap().circuits().len(), 4);
        assert!(uniform(5, 4).is_err());
    }

    #[test]
    fn random_matroids_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let m = random_sparse_paving(8, 4, &mut rng).unwrap();
            assert!(m.is_paving());
            let l = random_linear(8, 3, 2, &mut rng).unwrap();
            assert_eq!(l.n(), 8);
        }
    }
}
