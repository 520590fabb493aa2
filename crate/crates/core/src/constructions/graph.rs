use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankOracle};

/// A multigraph; edge `i` of the list becomes matroid element `i`.
/// Loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|(u, v)| *u >= vertices || *v >= vertices) {
            return Err(Error::Parse(format!("edge ({u},{v}) uses a vertex outside 0..{vertices}")));
        }
        Ok(GraphSpec { vertices, edges })
    }
}

/// `K_n` with edges in lexicographic order of `(i, j)`, `i < j`.
pub fn complete_graph(n: usize) -> GraphSpec {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    GraphSpec { vertices: n, edges }
}

/// The wheel `W_n`: rim vertices `0..n`, hub `n`; rim edges first, then spokes.
pub fn wheel(n: usize) -> GraphSpec {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    GraphSpec { vertices: n + 1, edges }
}

pub fn cycle_graph(n: usize) -> GraphSpec {
    GraphSpec { vertices: n, edges: (0..n).map(|i| (i, (i + 1) % n)).collect() }
}

#[derive(Debug, Clone)]
struct GraphicOracle {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl RankOracle for GraphicOracle {
    fn rank(&self, set: ElemSet) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut rank = 0;
        for e in set {
            let (u, v) = self.edges[e];
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                rank += 1;
            }
        }
        rank
    }
}

/// The cycle matroid `M(G)`: rank is the size of a spanning forest.
pub fn graphic(graph: &GraphSpec) -> Result<Matroid> {
    let oracle = GraphicOracle { vertices: graph.vertices, edges: graph.edges.clone() };
    Matroid::from_oracle(graph.edges.len(), Arc::new(oracle))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Edge sets of simple cycles, found by DFS from each start vertex.
    fn simple_cycles(g: &GraphSpec) -> Vec<ElemSet> {
        let mut out = std::collections::BTreeSet::new();
        for (e, &(u, v)) in g.edges.iter().enumerate() {
            if u == v {
                out.insert(ElemSet::singleton(e));
            }
        }
        fn dfs(
            g: &GraphSpec,
            start: usize,
            at: usize,
            visited: ElemSet,
            used: ElemSet,
            out: &mut std::collections::BTreeSet<ElemSet>,
        ) {
            for (e, &(a, b)) in g.edges.iter().enumerate() {
                if used.contains(e) || a == b {
                    continue;
                }
                let next = if a == at {
                    b
                } else if b == at {
                    a
                } else {
                    continue;
                };
                if next == start && !used.is_empty() {
                    out.insert(used.with(e));
                } else if next > start && !visited.contains(next) {
                    dfs(g, start, next, visited.with(next), used.with(e), out);
                }
            }
        }
        for s in 0..g.vertices {
            dfs(g, s, s, ElemSet::singleton(s), ElemSet::EMPTY, &mut out);
        }
        out.into_iter().collect()
    }

    #[test]
    fn k4_shape() {
        let m = graphic(&complete_graph(4)).unwrap();
        assert_eq!((m.n(), m.rank(), m.circuits().len()), (6, 3, 7));
    }

    #[test]
    fn tree_is_free() {
        let tree = GraphSpec::new(5, vec![(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let m = graphic(&tree).unwrap();
        assert!(m.is_free());
        assert!(m.circuits().is_empty());
    }

    #[test]
    fn wheel_rank() {
        for n in 3..=6 {
            let m = graphic(&wheel(n)).unwrap();
            assert_eq!((m.n(), m.rank()), (2 * n, n));
        }
    }

    #[test]
    fn circuits_are_simple_cycles() {
        let multigraph =
            GraphSpec::new(4, vec![(0, 1), (1, 2), (2, 0), (0, 1), (2, 3), (3, 3), (3, 0)]).unwrap();
        for g in [complete_graph(4), complete_graph(5), wheel(4), wheel(5), multigraph] {
            let m = graphic(&g).unwrap();
            assert_eq!(m.circuits(), simple_cycles(&g).as_slice(), "{g:?}");
        }
    }

    #[test]
    fn cocircuits_of_k4_are_minimal_cuts() {
        let g = complete_graph(4);
        let m = graphic(&g).unwrap();
        // brute force: edge cuts delta(S) for vertex subsets, keep the inclusion-minimal ones
        let mut cuts: Vec<ElemSet> = (1u32..(1 << 4) - 1)
            .map(|s| {
                g.edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(u, v))| (s >> u & 1) != (s >> v & 1))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        cuts.sort();
        cuts.dedup();
        let minimal: Vec<ElemSet> =
            cuts.iter().copied().filter(|c| !cuts.iter().any(|d| d != c && d.is_subset(*c))).collect();
        assert_eq!(m.dual().circuits(), minimal.as_slice());
        assert_eq!(m.cocircuits(), minimal);
    }
}
