use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::elemset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// A surjective colouring up to relabelling, stored as a restricted-growth
/// string: `a[0] = 0` and `a[i] <= 1 + max(a[..i])`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rgs: Vec<u8>,
    blocks: usize,
}

impl Partition {
    /// Canonicalizes an arbitrary labelling (labels numbered by first appearance).
    pub fn from_labels<L: Copy + Eq>(labels: &[L]) -> Self {
        let mut seen: Vec<L> = Vec::new();
        let rgs = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i as u8,
                None => {
                    seen.push(*l);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        Partition { rgs, blocks: seen.len() }
    }

    /// Accepts only strings that already satisfy the restricted-growth rule.
    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        if rgs.len() > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(rgs.len()));
        }
        let mut next = 0u8;
        for (i, &a) in rgs.iter().enumerate() {
            if a > next {
                return Err(Error::Parse(format!("position {i}: label {a} skips ahead of {next}")));
            }
            if a == next {
                next += 1;
            }
        }
        Ok(Partition { rgs, blocks: next as usize })
    }

    /// Builds from explicit blocks, which must partition `{0, .., n-1}`.
    pub fn from_blocks(n: usize, blocks: &[ElemSet]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            for e in *block {
                if e >= n {
                    return Err(Error::ElementOutOfRange { elem: e, n });
                }
                if labels[e] != usize::MAX {
                    return Err(Error::Parse(format!("element {e} lies in two blocks")));
                }
                labels[e] = b;
            }
        }
        if let Some(e) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Parse(format!("element {e} is in no block")));
        }
        Ok(Partition::from_labels(&labels))
    }

    pub fn single_block(n: usize) -> Self {
        Partition { rgs: vec![0; n], blocks: usize::from(n > 0) }
    }

    pub fn discrete(n: usize) -> Self {
        Partition { rgs: (0..n as u8).collect(), blocks: n }
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.rgs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rgs.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn block_of(&self, e: usize) -> usize {
        self.rgs[e] as usize
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn blocks(&self) -> Vec<ElemSet> {
        let mut out = vec![ElemSet::EMPTY; self.blocks];
        for (e, &b) in self.rgs.iter().enumerate() {
            out[b as usize].insert(e);
        }
        out
    }

    /// All members of `edge` lie in pairwise distinct blocks.
    pub fn is_rainbow(&self, edge: ElemSet) -> bool {
        let mut used = 0u64;
        for e in edge {
            let bit = 1u64 << self.rgs[e];
            if used & bit != 0 {
                return false;
            }
            used |= bit;
        }
        true
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.blocks()).finish()
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<ElemSet>::deserialize(deserializer)?;
        let n = blocks.iter().map(|b| b.len()).sum();
        Partition::from_blocks(n, &blocks).map_err(serde::de::Error::custom)
    }
}

pub fn is_rainbow(edge: ElemSet, partition: &Partition) -> bool {
    partition.is_rainbow(edge)
}

/// No hyperedge is rainbow under `partition`.
pub fn check_rainbow_free(h: &Hypergraph, partition: &Partition) -> bool {
    partition.len() == h.n_vertices() && !h.edges().iter().any(|&e| partition.is_rainbow(e))
}
