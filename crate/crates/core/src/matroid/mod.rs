//! Matroids given by a rank oracle, with lazily cached circuits and flats.

mod exchange;
mod oracle;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use exchange::MatroidExchange;
pub use oracle::{CircuitListOracle, DualOracle, MinorOracle, RankOracle, UniformOracle};

use crate::charpoly::Polynomial;
use crate::elemset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

#[derive(Default)]
struct Cache {
    circuits: OnceLock<Vec<ElemSet>>,
    flats: OnceLock<Vec<Vec<ElemSet>>>,
    charpoly: OnceLock<Polynomial>,
}

/// A matroid on `{0, .., n-1}`.
///
/// Cloning is cheap: the oracle and the caches are shared. Caches fill at most
/// once, so a matroid can be handed to several threads.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    oracle: Arc<dyn RankOracle>,
    cache: Arc<Cache>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("oracle", &self.oracle)
            .finish()
    }
}

/// Elements to delete and to contract; the two sets must be disjoint.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MinorSpec {
    pub deleted: ElemSet,
    pub contracted: ElemSet,
}

impl MinorSpec {
    pub fn delete(deleted: ElemSet) -> Self {
        MinorSpec { deleted, contracted: ElemSet::EMPTY }
    }

    pub fn contract(contracted: ElemSet) -> Self {
        MinorSpec { deleted: ElemSet::EMPTY, contracted }
    }
}

/// A minor together with the map from its elements back to the parent's.
#[derive(Debug, Clone)]
pub struct Minor {
    pub matroid: Matroid,
    pub index_map: Vec<usize>,
}

impl Minor {
    pub fn lift(&self, set: ElemSet) -> ElemSet {
        set.iter().map(|e| self.index_map[e]).collect()
    }
}

impl Matroid {
    pub fn from_oracle(n: usize, oracle: Arc<dyn RankOracle>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let rank = oracle.rank(ElemSet::full(n));
        Ok(Matroid { n, rank, oracle, cache: Arc::default() })
    }

    /// Builds a matroid from its circuits, checking the circuit axioms.
    pub fn from_circuits(n: usize, circuits: &[ElemSet]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut list: Vec<ElemSet> = circuits.to_vec();
        list.sort();
        list.dedup();
        check_circuit_axioms(n, &list)?;
        let m = Matroid::from_oracle(n, Arc::new(CircuitListOracle::new(n, &list)))?;
        let _ = m.cache.circuits.set(list);
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn oracle(&self) -> &Arc<dyn RankOracle> {
        &self.oracle
    }

    pub fn rank_of(&self, set: ElemSet) -> usize {
        debug_assert!(set.is_subset(self.ground()));
        self.oracle.rank(set)
    }

    pub fn is_independent(&self, set: ElemSet) -> bool {
        self.rank_of(set) == set.len()
    }

    pub fn is_basis(&self, set: ElemSet) -> bool {
        set.len() == self.rank && self.is_independent(set)
    }

    pub fn closure(&self, set: ElemSet) -> ElemSet {
        let r = self.rank_of(set);
        let mut out = set;
        for e in (self.ground() - set).iter() {
            if self.rank_of(set.with(e)) == r {
                out.insert(e);
            }
        }
        out
    }

    pub fn is_flat(&self, set: ElemSet) -> bool {
        self.closure(set) == set
    }

    pub fn loops(&self) -> ElemSet {
        self.ground().iter().filter(|&e| self.rank_of(ElemSet::singleton(e)) == 0).collect()
    }

    pub fn coloops(&self) -> ElemSet {
        let g = self.ground();
        g.iter().filter(|&e| self.rank_of(g.without(e)) < self.rank).collect()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_of(ElemSet::singleton(e)) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank_of(self.ground().without(e)) < self.rank
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        self.circuits().iter().all(|c| c.len() > 2)
    }

    /// True for `U_{n,n}`: every element is a coloop and there are no circuits.
    pub fn is_free(&self) -> bool {
        self.rank == self.n
    }

    /// All minimal dependent sets, sorted lexicographically.
    pub fn circuits(&self) -> &[ElemSet] {
        self.cache.circuits.get_or_init(|| self.enumerate_circuits())
    }

    fn enumerate_circuits(&self) -> Vec<ElemSet> {
        let mut found: Vec<ElemSet> = Vec::new();
        for k in 1..=(self.rank + 1).min(self.n) {
            let before = found.len();
            for s in ElemSet::k_subsets(self.n, k) {
                if found[..before].iter().any(|c| c.is_subset(s)) {
                    continue;
                }
                if self.rank_of(s) < k {
                    found.push(s);
                }
            }
        }
        found.sort();
        found
    }

    /// Flats grouped by rank, built upward from `closure(∅)`.
    pub fn flats(&self) -> &[Vec<ElemSet>] {
        self.cache.flats.get_or_init(|| {
            let mut levels = vec![vec![self.closure(ElemSet::EMPTY)]];
            for _ in 0..self.rank {
                let mut next = BTreeSet::new();
                for &f in levels.last().unwrap() {
                    let mut rest = self.ground() - f;
                    while let Some(e) = rest.min() {
                        let g = self.closure(f.with(e));
                        rest = rest - g;
                        next.insert(g);
                    }
                }
                levels.push(next.into_iter().collect());
            }
            levels
        })
    }

    pub fn flats_of_rank(&self, k: usize) -> Result<&[ElemSet]> {
        self.flats().get(k).map(Vec::as_slice).ok_or(Error::InvalidRank { rank: k, n: self.n })
    }

    pub fn hyperplanes(&self) -> &[ElemSet] {
        if self.rank == 0 {
            return &[];
        }
        &self.flats()[self.rank - 1]
    }

    /// Rank-`(r-2)` flats.
    pub fn colines(&self) -> Result<&[ElemSet]> {
        if self.rank < 2 {
            return Err(Error::NoColines(self.rank));
        }
        Ok(&self.flats()[self.rank - 2])
    }

    /// Largest cardinality of a coline.
    pub fn largest_coline_size(&self) -> Result<usize> {
        Ok(self.colines()?.iter().map(|l| l.len()).max().unwrap_or(0))
    }

    /// Smallest cardinality of the complement of a coline.
    pub fn smallest_coline_complement(&self) -> Result<usize> {
        Ok(self.colines()?.iter().map(|l| self.n - l.len()).min().unwrap_or(self.n))
    }

    pub fn cocircuits(&self) -> Vec<ElemSet> {
        let mut out: Vec<ElemSet> = self.hyperplanes().iter().map(|h| h.complement(self.n)).collect();
        out.sort();
        out
    }

    pub fn dual(&self) -> Matroid {
        let oracle = DualOracle { inner: self.oracle.clone(), n: self.n, inner_rank: self.rank };
        Matroid { n: self.n, rank: self.n - self.rank, oracle: Arc::new(oracle), cache: Arc::default() }
    }

    pub fn minor(&self, spec: MinorSpec) -> Result<Minor> {
        if !spec.deleted.is_disjoint(spec.contracted) {
            return Err(Error::InvalidMinor);
        }
        let removed = spec.deleted | spec.contracted;
        if !removed.is_subset(self.ground()) {
            let bad = (removed - self.ground()).min().unwrap_or(0);
            return Err(Error::ElementOutOfRange { elem: bad, n: self.n });
        }
        let index_map: Vec<usize> = (self.ground() - removed).iter().collect();
        let oracle = MinorOracle {
            inner: self.oracle.clone(),
            contracted: spec.contracted,
            contracted_rank: self.rank_of(spec.contracted),
            index_map: index_map.clone(),
        };
        let matroid = Matroid::from_oracle(index_map.len(), Arc::new(oracle))?;
        Ok(Minor { matroid, index_map })
    }

    pub fn delete(&self, set: ElemSet) -> Result<Minor> {
        self.minor(MinorSpec::delete(set))
    }

    pub fn contract(&self, set: ElemSet) -> Result<Minor> {
        self.minor(MinorSpec::contract(set))
    }

    /// Restriction to `set` (deletion of its complement).
    pub fn restrict(&self, set: ElemSet) -> Result<Minor> {
        self.delete(self.ground() - set)
    }

    /// 2-sum along basepoints `z1` of `self` and `z2` of `other`.
    ///
    /// The ground set is `E1 \ z1` (in order) followed by `E2 \ z2`.
    pub fn two_sum(&self, z1: usize, other: &Matroid, z2: usize) -> Result<Matroid> {
        check_basepoint(self, z1)?;
        check_basepoint(other, z2)?;
        let n = self.n + other.n - 2;
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let map1 = |e: usize| if e < z1 { e } else { e - 1 };
        let shift = self.n - 1;
        let map2 = |e: usize| shift + if e < z2 { e } else { e - 1 };
        let relabel = |c: ElemSet, z: usize, f: &dyn Fn(usize) -> usize| -> ElemSet {
            c.without(z).iter().map(f).collect()
        };
        let (through1, avoid1): (Vec<_>, Vec<_>) = self.circuits().iter().partition(|c| c.contains(z1));
        let (through2, avoid2): (Vec<_>, Vec<_>) = other.circuits().iter().partition(|c| c.contains(z2));
        let mut circuits = Vec::new();
        circuits.extend(avoid1.iter().map(|&&c| relabel(c, z1, &map1)));
        circuits.extend(avoid2.iter().map(|&&c| relabel(c, z2, &map2)));
        for &&c1 in &through1 {
            for &&c2 in &through2 {
                circuits.push(relabel(c1, z1, &map1) | relabel(c2, z2, &map2));
            }
        }
        circuits.sort();
        let m = Matroid::from_oracle(n, Arc::new(CircuitListOracle::new(n, &circuits)))?;
        let _ = m.cache.circuits.set(circuits);
        Ok(m)
    }

    /// Every circuit has at least `r` elements.
    pub fn is_paving(&self) -> bool {
        self.circuits().iter().all(|c| c.len() >= self.rank)
    }

    /// Whitney's criterion: the symmetric difference of any two distinct
    /// circuits is a disjoint union of circuits.
    pub fn is_binary(&self) -> bool {
        let cs = self.circuits();
        for (i, &a) in cs.iter().enumerate() {
            for &b in &cs[i + 1..] {
                if a.is_disjoint(b) {
                    continue;
                }
                if self.decompose_into_circuits(a ^ b).is_none() {
                    return false;
                }
            }
        }
        true
    }

    /// Splits `set` into pairwise disjoint circuits, if possible.
    pub fn decompose_into_circuits(&self, set: ElemSet) -> Option<Vec<ElemSet>> {
        fn go(set: ElemSet, cs: &[ElemSet], acc: &mut Vec<ElemSet>) -> bool {
            let Some(x) = set.min() else { return true };
            for &c in cs.iter().filter(|c| c.contains(x) && c.is_subset(set)) {
                acc.push(c);
                if go(set - c, cs, acc) {
                    return true;
                }
                acc.pop();
            }
            false
        }
        let mut acc = Vec::new();
        go(set, self.circuits(), &mut acc).then_some(acc)
    }

    pub(crate) fn charpoly_cache(&self) -> &OnceLock<Polynomial> {
        &self.cache.charpoly
    }

    /// Compares rank functions on every subset. Exponential; meant for tests.
    pub fn same_rank_function(&self, other: &Matroid) -> bool {
        self.n == other.n && self.ground().subsets().all(|s| self.rank_of(s) == other.rank_of(s))
    }
}

fn check_basepoint(m: &Matroid, z: usize) -> Result<()> {
    if z >= m.n {
        return Err(Error::InvalidBasepoint(format!("element {z} not in ground set")));
    }
    if m.n < 3 {
        return Err(Error::InvalidBasepoint(format!("matroid has only {} elements", m.n)));
    }
    if m.is_loop(z) {
        return Err(Error::InvalidBasepoint(format!("element {z} is a loop")));
    }
    if m.is_coloop(z) {
        return Err(Error::InvalidBasepoint(format!("element {z} is a coloop")));
    }
    Ok(())
}

fn check_circuit_axioms(n: usize, circuits: &[ElemSet]) -> Result<()> {
    let ground = ElemSet::full(n);
    for (i, &c) in circuits.iter().enumerate() {
        if c.is_empty() {
            return Err(Error::NotAMatroid("empty circuit".into()));
        }
        if !c.is_subset(ground) {
            return Err(Error::NotAMatroid(format!("circuit {c} leaves the ground set")));
        }
        for &d in &circuits[i + 1..] {
            if c.is_subset(d) || d.is_subset(c) {
                return Err(Error::NotAMatroid(format!("circuits {c} and {d} are nested")));
            }
            for e in c & d {
                let u = (c | d).without(e);
                if !circuits.iter().any(|x| x.is_subset(u)) {
                    return Err(Error::NotAMatroid(format!("elimination fails for {c}, {d} at {e}")));
                }
            }
        }
    }
    Ok(())
}
