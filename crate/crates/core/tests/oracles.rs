//! Library results compared with small, independent brute-force computations.

use matroid_hc::charpoly::{characteristic_polynomial, critical_exponent, CriticalExponent, Polynomial};
use matroid_hc::constructions::{
    complete_graph, graphic, projective_geometry, steiner_matroid, uniform, FiniteField, SteinerSystem,
};
use matroid_hc::hc::{hc, HcValue, SearchConfig};
use matroid_hc::hypergraph::{circuits_view, hamiltonian_view, p_circuits_view, Hypergraph};
use matroid_hc::{ElemSet, Matroid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest block count of a rainbow-free partition, by listing every set partition.
fn naive_max_rainbow_free(n: usize, edges: &[Vec<usize>]) -> usize {
    fn go(
        i: usize,
        n: usize,
        labels: &mut Vec<usize>,
        blocks: usize,
        edges: &[Vec<usize>],
        best: &mut usize,
    ) {
        if i == n {
            let rainbow = |e: &Vec<usize>| {
                let mut seen = std::collections::HashSet::new();
                e.iter().all(|&x| seen.insert(labels[x]))
            };
            if !edges.iter().any(rainbow) {
                *best = (*best).max(blocks);
            }
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(i + 1, n, labels, blocks.max(b + 1), edges, best);
            labels.pop();
        }
    }
    let mut best = 0;
    go(0, n, &mut Vec::new(), 0, edges, &mut best);
    best
}

fn naive_hc(n: usize, edges: &[Vec<usize>]) -> Option<usize> {
    if edges.is_empty() {
        return None;
    }
    if edges.iter().any(|e| e.len() <= 1) {
        return Some(1);
    }
    Some(naive_max_rainbow_free(n, edges) + 1)
}

fn engine_hc(h: &Hypergraph) -> Option<usize> {
    hc(h, &SearchConfig::default()).unwrap().value.value()
}

fn as_lists(h: &Hypergraph) -> Vec<Vec<usize>> {
    h.edges().iter().map(|e| e.to_vec()).collect()
}

#[test]
fn engine_matches_partition_enumeration_on_random_hypergraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let n = rng.random_range(1..=8);
        let m = rng.random_range(0..=12);
        let edges: Vec<ElemSet> = (0..m)
            .map(|_| {
                let mut e = ElemSet::EMPTY;
                let size = rng.random_range(1..=n.min(5));
                while e.len() < size {
                    e.insert(rng.random_range(0..n));
                }
                e
            })
            .collect();
        let h = Hypergraph::new(n, edges).unwrap();
        assert_eq!(engine_hc(&h), naive_hc(n, &as_lists(&h)), "{h:?}");
    }
}

#[test]
fn engine_matches_partition_enumeration_on_matroid_views() {
    let gf2 = FiniteField::new(2).unwrap();
    let fano = projective_geometry(3, &gf2).unwrap();
    let k4 = graphic(&complete_graph(4)).unwrap();
    let u24 = uniform(2, 4).unwrap();
    for (m, name) in [(&fano, "fano"), (&k4, "K4"), (&u24, "U24")] {
        for h in [circuits_view(m).unwrap(), hamiltonian_view(m).unwrap(), p_circuits_view(m, 3).unwrap()] {
            assert_eq!(engine_hc(&h), naive_hc(m.n(), &as_lists(&h)), "{name} {:?}", h.family());
        }
    }
}

/// Rank of a set of GF(2) vectors packed into integers.
fn gf2_rank(mut vs: Vec<u32>) -> usize {
    let mut rank = 0;
    for bit in (0..32).rev() {
        let Some(pos) = vs.iter().position(|v| v >> bit & 1 == 1) else { continue };
        let pivot = vs.swap_remove(pos);
        for v in vs.iter_mut() {
            if *v >> bit & 1 == 1 {
                *v ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Nonzero vectors of GF(2)^3, in the library's canonical order (lexicographic
/// on coordinates, first coordinate most significant).
fn fano_vectors() -> Vec<u32> {
    (1..8).collect()
}

#[test]
fn fano_rank_function_from_bit_vectors() {
    let fano = projective_geometry(3, &FiniteField::new(2).unwrap()).unwrap();
    let vs = fano_vectors();
    for a in fano.ground().subsets() {
        let rank = gf2_rank(a.iter().map(|e| vs[e]).collect());
        assert_eq!(fano.rank_of(a), rank, "{a}");
    }
}

#[test]
fn fano_has_seven_four_element_circuits() {
    // four points are a circuit iff they sum to zero with no three collinear;
    // in PG(2,2) that means no three sum to zero
    let vs = fano_vectors();
    let mut count = 0;
    for s in ElemSet::k_subsets(7, 4) {
        let pts: Vec<u32> = s.iter().map(|e| vs[e]).collect();
        let collinear = (0..4).any(|i| (i + 1..4).any(|j| (j + 1..4).any(|k| pts[i] ^ pts[j] ^ pts[k] == 0)));
        if !collinear {
            count += 1;
        }
    }
    assert_eq!(count, 7);
    let fano = projective_geometry(3, &FiniteField::new(2).unwrap()).unwrap();
    assert_eq!(p_circuits_view(&fano, 4).unwrap().edges().len(), count);
}

#[test]
fn fano_contracted_at_a_point() {
    let fano = projective_geometry(3, &FiniteField::new(2).unwrap()).unwrap();
    let vs = fano_vectors();
    let minor = fano.contract(ElemSet::singleton(0)).unwrap();
    let m = &minor.matroid;
    assert_eq!((m.n(), m.rank()), (6, 2));
    for a in m.ground().subsets() {
        let lifted: Vec<u32> = minor.lift(a).iter().map(|e| vs[e]).chain([vs[0]]).collect();
        assert_eq!(m.rank_of(a), gf2_rank(lifted) - 1);
    }
    let pairs: Vec<ElemSet> = m.circuits().iter().copied().filter(|c| c.len() == 2).collect();
    assert_eq!(pairs.len(), 3);
    assert_eq!(pairs.iter().fold(ElemSet::EMPTY, |acc, &p| acc | p), m.ground());
}

/// Number of connected components of the graph on `v` vertices with the given edges.
fn components(v: usize, edges: &[(usize, usize)]) -> usize {
    let mut seen = vec![false; v];
    let mut count = 0;
    for start in 0..v {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for &(a, b) in edges {
                for (p, q) in [(a, b), (b, a)] {
                    if p == x && !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
    }
    count
}

fn k4_edges() -> Vec<(usize, usize)> {
    vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
}

fn minimal(sets: Vec<ElemSet>) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> =
        sets.iter().copied().filter(|s| !sets.iter().any(|t| t != s && t.is_subset(*s))).collect();
    out.sort();
    out
}

#[test]
fn k4_circuits_are_minimal_dependent_edge_sets() {
    let edges = k4_edges();
    let dependent: Vec<ElemSet> = ElemSet::full(6)
        .subsets()
        .filter(|s| {
            let sub: Vec<_> = s.iter().map(|e| edges[e]).collect();
            // a forest on 4 vertices has 4 - components edges
            sub.len() > 4 - components(4, &sub)
        })
        .collect();
    let circuits = minimal(dependent);
    assert_eq!(circuits.len(), 7);
    let k4 = graphic(&complete_graph(4)).unwrap();
    assert_eq!(k4.circuits(), &circuits[..]);
}

#[test]
fn k4_cocircuits_are_minimal_cuts() {
    let edges = k4_edges();
    let cuts: Vec<ElemSet> = ElemSet::full(6)
        .subsets()
        .filter(|s| {
            let rest: Vec<_> = (ElemSet::full(6) - *s).iter().map(|e| edges[e]).collect();
            components(4, &rest) > 1
        })
        .collect();
    let k4 = graphic(&complete_graph(4)).unwrap();
    assert_eq!(k4.dual().circuits(), &minimal(cuts)[..]);
}

#[test]
fn two_sum_of_triangles_is_u34() {
    let u23 = uniform(2, 3).unwrap();
    let m = u23.two_sum(0, &u23, 0).unwrap();
    assert_eq!((m.n(), m.rank()), (4, 3));
    for a in m.ground().subsets() {
        assert_eq!(m.rank_of(a), a.len().min(3));
    }
}

#[test]
fn affine_plane_steiner_matroid() {
    let m = steiner_matroid(&SteinerSystem::builtin("S(2,3,9)").unwrap()).unwrap();
    assert!(m.is_paving());
    assert_eq!(m.rank(), 3);
    let hyperplanes = m.hyperplanes();
    assert_eq!(hyperplanes.len(), 12);
    assert!(hyperplanes.iter().all(|h| h.len() == 3));
}

fn whitney_by_hand(m: &Matroid) -> Vec<i64> {
    let r = m.rank();
    let mut c = vec![0i64; r + 1];
    for a in m.ground().subsets() {
        c[r - m.rank_of(a)] += if a.len() % 2 == 0 { 1 } else { -1 };
    }
    c
}

#[test]
fn characteristic_polynomials() {
    let fano = projective_geometry(3, &FiniteField::new(2).unwrap()).unwrap();
    assert_eq!(whitney_by_hand(&fano), vec![-8, 14, -7, 1]);
    assert_eq!(characteristic_polynomial(&fano).unwrap(), Polynomial::from_i64(&[-8, 14, -7, 1]));
    assert_eq!(critical_exponent(&fano, 2).unwrap(), CriticalExponent::Finite(3));
    let k3 = graphic(&complete_graph(3)).unwrap();
    assert_eq!(whitney_by_hand(&k3), vec![2, -3, 1]);
    assert_eq!(critical_exponent(&k3, 2).unwrap(), CriticalExponent::Finite(2));
}

#[test]
fn no_hyperedges_and_loops() {
    let free = uniform(4, 4).unwrap();
    assert_eq!(
        hc(&circuits_view(&free).unwrap(), &SearchConfig::default()).unwrap().value,
        HcValue::NoHyperedges
    );
    let with_loop = uniform(0, 1).unwrap();
    assert_eq!(
        hc(&circuits_view(&with_loop).unwrap(), &SearchConfig::default()).unwrap().value,
        HcValue::Value(1)
    );
}

#[test]
fn two_sum_critical_exponent_needs_representability() {
    use matroid_hc::charpoly::critical_exponent_two_sum_lemma;
    let u24 = uniform(2, 4).unwrap();
    // chi(U24 (+)2 U24) = (x-1)(x^2-5x+8) is 2 at x=2, but U24\z = U23 has chi(2) = 0
    let binary = critical_exponent_two_sum_lemma(&u24, 0, 2).unwrap();
    assert_eq!(
        (binary.c_two_sum, binary.c_deletion),
        (CriticalExponent::Finite(1), CriticalExponent::Finite(2))
    );
    assert!(!binary.lemma_holds);
    // over GF(3), where U24 is representable, the equality is restored
    assert!(critical_exponent_two_sum_lemma(&u24, 0, 3).unwrap().lemma_holds);
    let k4 = graphic(&complete_graph(4)).unwrap();
    assert!((0..6).all(|z| critical_exponent_two_sum_lemma(&k4, z, 2).unwrap().lemma_holds));
}
