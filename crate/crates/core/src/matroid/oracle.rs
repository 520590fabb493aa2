use std::fmt;
use std::sync::Arc;

use crate::elemset::ElemSet;

/// A rank function on subsets of `{0, .., n-1}`.
///
/// Implementations must satisfy the matroid rank axioms; nothing here checks
/// them on every call.
pub trait RankOracle: Send + Sync + fmt::Debug {
    fn rank(&self, set: ElemSet) -> usize;
}

#[derive(Debug, Clone)]
pub struct UniformOracle {
    pub rank: usize,
}

impl RankOracle for UniformOracle {
    fn rank(&self, set: ElemSet) -> usize {
        set.len().min(self.rank)
    }
}

/// Rank computed greedily from an explicit circuit list.
#[derive(Debug, Clone)]
pub struct CircuitListOracle {
    by_element: Vec<Vec<ElemSet>>,
}

impl CircuitListOracle {
    pub fn new(n: usize, circuits: &[ElemSet]) -> Self {
        let mut by_element = vec![Vec::new(); n];
        for &c in circuits {
            for e in c {
                by_element[e].push(c);
            }
        }
        CircuitListOracle { by_element }
    }
}

impl RankOracle for CircuitListOracle {
    fn rank(&self, set: ElemSet) -> usize {
        let mut indep = ElemSet::EMPTY;
        for e in set {
            let with = indep.with(e);
            if !self.by_element[e].iter().any(|c| c.is_subset(with)) {
                indep = with;
            }
        }
        indep.len()
    }
}

/// `rk*(A) = |A| - r + rk(E \ A)`.
#[derive(Debug, Clone)]
pub struct DualOracle {
    pub inner: Arc<dyn RankOracle>,
    pub n: usize,
    pub inner_rank: usize,
}

impl RankOracle for DualOracle {
    fn rank(&self, set: ElemSet) -> usize {
        set.len() + self.inner.rank(set.complement(self.n)) - self.inner_rank
    }
}

/// Rank of `M \ D / C` on the re-densified ground set `E \ (D u C)`.
#[derive(Debug, Clone)]
pub struct MinorOracle {
    pub inner: Arc<dyn RankOracle>,
    pub contracted: ElemSet,
    pub contracted_rank: usize,
    pub index_map: Vec<usize>,
}

impl MinorOracle {
    pub fn lift(&self, set: ElemSet) -> ElemSet {
        set.iter().map(|e| self.index_map[e]).collect()
    }
}

impl RankOracle for MinorOracle {
    fn rank(&self, set: ElemSet) -> usize {
        self.inner.rank(self.lift(set) | self.contracted) - self.contracted_rank
    }
}
