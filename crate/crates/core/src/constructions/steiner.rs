use std::sync::Arc;

use crate::elemset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankOracle};

/// A Steiner system `S(t, k, n)`: every `t`-subset of the `n` points lies in
/// exactly one `k`-element block. Validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSystem {
    t: usize,
    k: usize,
    n: usize,
    blocks: Vec<ElemSet>,
}

const FANO: &[[usize; 3]] = &[[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];

// lines of AG(2,3); point (x, y) is 3x + y
const AFFINE_PLANE_3: &[[usize; 3]] = &[
    [0, 1, 2],
    [3, 4, 5],
    [6, 7, 8],
    [0, 3, 6],
    [1, 4, 7],
    [2, 5, 8],
    [0, 4, 8],
    [1, 5, 6],
    [2, 3, 7],
    [0, 5, 7],
    [1, 3, 8],
    [2, 4, 6],
];

// cyclic, base blocks {0,1,4} and {0,2,7} mod 13
const STS_13: &[[usize; 3]] = &[
    [0, 1, 4],
    [0, 2, 7],
    [0, 3, 12],
    [0, 5, 11],
    [0, 6, 8],
    [0, 9, 10],
    [1, 2, 5],
    [1, 3, 8],
    [1, 6, 12],
    [1, 7, 9],
    [1, 10, 11],
    [2, 3, 6],
    [2, 4, 9],
    [2, 8, 10],
    [2, 11, 12],
    [3, 4, 7],
    [3, 5, 10],
    [3, 9, 11],
    [4, 5, 8],
    [4, 6, 11],
    [4, 10, 12],
    [5, 6, 9],
    [5, 7, 12],
    [6, 7, 10],
    [7, 8, 11],
    [8, 9, 12],
];

// affine planes of AG(3,2); point i is its 3-bit binary vector
const SQS_8: &[[usize; 4]] = &[
    [0, 1, 2, 3],
    [4, 5, 6, 7],
    [0, 1, 4, 5],
    [2, 3, 6, 7],
    [0, 2, 4, 6],
    [1, 3, 5, 7],
    [0, 1, 6, 7],
    [2, 3, 4, 5],
    [0, 2, 5, 7],
    [1, 3, 4, 6],
    [0, 3, 4, 7],
    [1, 2, 5, 6],
    [0, 3, 5, 6],
    [1, 2, 4, 7],
];

/// Names accepted by [`SteinerSystem::builtin`].
pub const BUILTIN_STEINER: &[&str] = &["S(2,3,7)", "S(2,3,9)", "S(2,3,13)", "S(3,4,8)"];

impl SteinerSystem {
    pub fn new(t: usize, k: usize, n: usize, blocks: Vec<ElemSet>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        if !(1 <= t && t < k && k <= n) {
            return Err(Error::InvalidSteiner(format!("need 1 <= t < k <= n, got ({t},{k},{n})")));
        }
        let ground = ElemSet::full(n);
        for b in &blocks {
            if b.len() != k || !b.is_subset(ground) {
                return Err(Error::InvalidSteiner(format!("block {b} is not a {k}-subset of 0..{n}")));
            }
        }
        for s in ElemSet::k_subsets(n, t) {
            let hits = blocks.iter().filter(|b| s.is_subset(**b)).count();
            if hits != 1 {
                return Err(Error::InvalidSteiner(format!("{s} lies in {hits} blocks")));
            }
        }
        let mut blocks = blocks;
        blocks.sort();
        Ok(SteinerSystem { t, k, n, blocks })
    }

    /// One of the stored systems in [`BUILTIN_STEINER`].
    pub fn builtin(name: &str) -> Result<Self> {
        fn load<const K: usize>(t: usize, n: usize, rows: &[[usize; K]]) -> Result<SteinerSystem> {
            let blocks = rows.iter().map(|r| r.iter().copied().collect()).collect();
            SteinerSystem::new(t, K, n, blocks)
        }
        let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "S(2,3,7)" => load(2, 7, FANO),
            "S(2,3,9)" => load(2, 9, AFFINE_PLANE_3),
            "S(2,3,13)" => load(2, 13, STS_13),
            "S(3,4,8)" => load(3, 8, SQS_8),
            _ => Err(Error::UnknownSteiner(name.to_string())),
        }
    }

    /// Reads the hyperplanes of a paving matroid whose hyperplanes all have
    /// the same size as a Steiner system `S(r-1, k, n)`.
    pub fn from_hyperplanes(m: &Matroid) -> Result<Self> {
        let r = m.rank();
        if r < 2 {
            return Err(Error::InvalidSteiner(format!("rank {r} is below 2")));
        }
        let hyperplanes = m.hyperplanes().to_vec();
        let k = hyperplanes.first().map(|h| h.len()).unwrap_or(0);
        SteinerSystem::new(r - 1, k, m.n(), hyperplanes)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[ElemSet] {
        &self.blocks
    }
}

/// Rank `t+1` paving matroid whose hyperplanes are the blocks.
#[derive(Debug, Clone)]
struct SteinerOracle {
    t: usize,
    blocks: Vec<ElemSet>,
}

impl RankOracle for SteinerOracle {
    fn rank(&self, set: ElemSet) -> usize {
        let size = set.len();
        if size <= self.t {
            size
        } else if self.blocks.iter().any(|b| set.is_subset(*b)) {
            self.t
        } else {
            self.t + 1
        }
    }
}

pub fn steiner_matroid(system: &SteinerSystem) -> Result<Matroid> {
    let oracle = SteinerOracle { t: system.t, blocks: system.blocks.clone() };
    Matroid::from_oracle(system.n, Arc::new(oracle))
}

/// Sufficient condition `n > (t+1)(k+1-t)` for the Steiner matroid to have a
/// circuit of size `t+2`.
pub fn steiner_hamiltonicity_bound(t: usize, k: usize, n: usize) -> Result<bool> {
    if !(2 <= t && t < k && k < n) {
        return Err(Error::Precondition(format!("need 2 <= t < k < n, got ({t},{k},{n})")));
    }
    Ok(n > (t + 1) * (k + 1 - t))
}
