//! Fixed-width subsets of a ground set `{0, .., n-1}` with `n <= 64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of the ground set, stored as a single machine word.
///
/// Ordering is lexicographic on the ascending member lists, so `{0,1,5}`
/// sorts before `{0,2}` and `{0}` sorts before `{0,1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_ELEMENTS);
        ElemSet(1u64 << e)
    }

    /// Builds a set from element indices, rejecting anything outside `0..n`.
    pub fn try_from_elems(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut bits = 0u64;
        for e in elems {
            if e >= n {
                return Err(Error::ElementOutOfRange { elem: e, n });
            }
            bits |= 1u64 << e;
        }
        Ok(ElemSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    pub fn with(self, e: usize) -> Self {
        ElemSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElemSet(self.0 & !(1u64 << e))
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElemSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement inside `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        ElemSet(!self.0) & ElemSet::full(n)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Iterates all subsets of `{0, .., n-1}` with exactly `k` members in
    /// colex order (Gosper's hack).
    pub fn k_subsets(n: usize, k: usize) -> KSubsets {
        KSubsets::new(n, k)
    }

    /// Iterates all subsets of `self` (including the empty set and `self`).
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }
}

impl BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & rhs.0)
    }
}

impl BitXor for ElemSet {
    type Output = ElemSet;
    fn bitxor(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 ^ rhs.0)
    }
}

impl Sub for ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & !rhs.0)
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let elems = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = elems.iter().find(|&&e| e >= MAX_ELEMENTS) {
            return Err(serde::de::Error::custom(format!("element {bad} exceeds 63")));
        }
        Ok(elems.into_iter().collect())
    }
}

/// Ascending iterator over set members.
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Iter {}

pub struct KSubsets {
    cur: u64,
    n: usize,
    done: bool,
}

impl KSubsets {
    fn new(n: usize, k: usize) -> Self {
        if k > n || n > MAX_ELEMENTS {
            return KSubsets { cur: 0, n, done: true };
        }
        let cur = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        KSubsets { cur, n, done: false }
    }
}

impl Iterator for KSubsets {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        if self.done {
            return None;
        }
        let out = ElemSet(self.cur);
        let c = self.cur;
        if c == 0 {
            self.done = true;
            return Some(out);
        }
        let lowest = c & c.wrapping_neg();
        let ripple = c.wrapping_add(lowest);
        if ripple == 0 {
            self.done = true;
            return Some(out);
        }
        let next = (((c ^ ripple) >> 2) / lowest) | ripple;
        if self.n < 64 && next >> self.n != 0 {
            self.done = true;
        } else {
            self.cur = next;
        }
        Some(out)
    }
}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        let cur = self.next?;
        self.next = if cur == self.mask { None } else { Some((cur.wrapping_sub(self.mask)) & self.mask) };
        Some(ElemSet(cur))
    }
}
