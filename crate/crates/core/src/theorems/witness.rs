//! Rainbow-free colourings built directly from matroid structure.
//!
//! Every generator validates its output against the relevant hypergraph and
//! reports [`Error::Counterexample`] rather than returning a bad colouring.
//! Ties are broken by taking the lexicographically first candidate.

use crate::constructions::{projective_geometry, FiniteField};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::hc::{check_rainbow_free, Partition};
use crate::hypergraph::{bases_view, circuits_view, hamiltonian_view, p_circuits_view, Hypergraph};
use crate::matroid::Matroid;

fn validated(h: &Hypergraph, labels: &[usize], what: &str) -> Result<Partition> {
    let p = Partition::from_labels(labels);
    if !check_rainbow_free(h, &p) {
        return Err(Error::Counterexample(format!("{what} colouring {p:?} has a rainbow edge")));
    }
    Ok(p)
}

/// Labels for an `r`-block colouring of a loopless matroid with no rainbow
/// circuit: peel off a cocircuit as one block, recurse on the deletion.
fn circuit_colouring_labels(m: &Matroid) -> Result<Vec<usize>> {
    if !m.is_loopless() {
        return Err(Error::Precondition("matroid has a loop".into()));
    }
    if m.n() == 0 {
        return Ok(Vec::new());
    }
    let mut labels = vec![usize::MAX; m.n()];
    // current minor and its map back to `m`
    let mut current = m.clone();
    let mut to_orig: Vec<usize> = (0..m.n()).collect();
    let mut block = 0;
    while current.rank() > 1 {
        let cocircuit = current.cocircuits()[0];
        for e in cocircuit {
            labels[to_orig[e]] = block;
        }
        block += 1;
        let minor = current.delete(cocircuit)?;
        to_orig = minor.index_map.iter().map(|&e| to_orig[e]).collect();
        current = minor.matroid;
    }
    for e in to_orig {
        labels[e] = block;
    }
    Ok(labels)
}

/// An `r`-block partition with no rainbow circuit.
pub fn witness_circuit_colouring(m: &Matroid) -> Result<Partition> {
    if m.is_free() {
        return Err(Error::Precondition("free matroid has no circuits".into()));
    }
    let labels = circuit_colouring_labels(m)?;
    validated(&circuits_view(m)?, &labels, "cocircuit")
}

/// An `r`-block partition with no rainbow basis, for a non-paving matroid: a
/// smallest circuit is totally multicoloured and the rest share the other blocks.
pub fn witness_nonpaving_bases_colouring(m: &Matroid) -> Result<Partition> {
    let r = m.rank();
    let c = m
        .circuits()
        .iter()
        .copied()
        .filter(|c| c.len() < r)
        .min_by_key(|c| c.len())
        .ok_or_else(|| Error::NotApplicable("matroid is paving".into()))?;
    let k = c.len();
    let mut labels = vec![0; m.n()];
    for (i, e) in c.iter().enumerate() {
        labels[e] = i;
    }
    for (j, e) in (m.ground() - c).iter().enumerate() {
        labels[e] = k + j.min(r - k - 1);
    }
    validated(&bases_view(m)?, &labels, "non-paving bases")
}

/// `|L|+1` blocks with no rainbow basis for a largest coline `L`: its points
/// are singletons and its complement, which meets every basis twice, is one block.
pub fn witness_coline_bases_colouring(m: &Matroid) -> Result<Partition> {
    let size = m.largest_coline_size()?;
    let coline = *m.colines()?.iter().find(|l| l.len() == size).expect("colines exist");
    let rest = coline.len();
    let labels: Vec<usize> = (0..m.n())
        .map(|e| if coline.contains(e) { (coline & ElemSet::full(e)).len() } else { rest })
        .collect();
    validated(&bases_view(m)?, &labels, "coline")
}

/// `h+1` blocks with no rainbow Hamiltonian circuit: the points of a largest
/// hyperplane are singletons and its complement is one block.
pub fn witness_hyperplane_hc_colouring(m: &Matroid) -> Result<Partition> {
    let h = hamiltonian_view(m)?;
    if h.is_empty() {
        return Err(Error::Precondition("no Hamiltonian circuit".into()));
    }
    let size = m.hyperplanes().iter().map(|h| h.len()).max().unwrap_or(0);
    let hyperplane = *m.hyperplanes().iter().find(|h| h.len() == size).expect("rank >= 1");
    let rest = hyperplane.len();
    let labels: Vec<usize> = (0..m.n())
        .map(|e| if hyperplane.contains(e) { (hyperplane & ElemSet::full(e)).len() } else { rest })
        .collect();
    validated(&h, &labels, "hyperplane")
}

/// Colouring of `PG(r-1,q)` with no rainbow `p`-circuit: a rank-`(p-2)` flat
/// `F` is totally multicoloured and `PG(r-1,q)/F` gets the cocircuit
/// colouring. The block count is `|F| + rank(M/F) = (q^(p-2)-1)/(q-1) + r-p+2`.
pub fn witness_cp_lower_bound(r: usize, field: &FiniteField, p: usize) -> Result<Partition> {
    if p < 3 || p > r + 1 {
        return Err(Error::Precondition(format!("need 3 <= p <= r+1, got p={p}, r={r}")));
    }
    let m = projective_geometry(r, field)?;
    let mut basis = ElemSet::EMPTY;
    for e in 0..m.n() {
        if basis.len() == p - 2 {
            break;
        }
        if m.rank_of(basis.with(e)) > basis.len() {
            basis.insert(e);
        }
    }
    let flat = m.closure(basis);
    let quotient = m.contract(flat)?;
    let inner = circuit_colouring_labels(&quotient.matroid)?;
    let offset = flat.len();
    let mut labels = vec![0; m.n()];
    for (i, e) in flat.iter().enumerate() {
        labels[e] = i;
    }
    for (e, l) in inner.into_iter().enumerate() {
        labels[quotient.index_map[e]] = offset + l;
    }
    validated(&p_circuits_view(&m, p)?, &labels, "flat-plus-contraction")
}

/// Given a rainbow Hamiltonian circuit `c` of a simple binary matroid, returns
/// a strictly smaller rainbow circuit.
///
/// Takes the first element `a` outside `c` and the first circuit `c'` in
/// `c + a` through `a`. If `c'` is rainbow it is the answer; otherwise the
/// circuit through `a` in the decomposition of `c △ c'` is.
pub fn shrink_rainbow_circuit(m: &Matroid, partition: &Partition, c: ElemSet) -> Result<ElemSet> {
    let r = m.rank();
    if partition.len() != m.n() {
        return Err(Error::Precondition("partition does not cover the ground set".into()));
    }
    if partition.block_count() != r + 1 {
        return Err(Error::Precondition(format!(
            "partition has {} blocks, need {}",
            partition.block_count(),
            r + 1
        )));
    }
    if c.len() != r + 1 || m.circuits().binary_search(&c).is_err() {
        return Err(Error::Precondition(format!("{c} is not a Hamiltonian circuit")));
    }
    if !partition.is_rainbow(c) {
        return Err(Error::Precondition(format!("{c} is not rainbow")));
    }
    if !m.is_simple() || !m.is_binary() {
        return Err(Error::Precondition("matroid must be simple and binary".into()));
    }
    let a =
        (m.ground() - c).min().ok_or_else(|| Error::Precondition("no element outside the circuit".into()))?;
    let c_prime = *m
        .circuits()
        .iter()
        .find(|d| d.contains(a) && d.is_subset(c.with(a)))
        .ok_or_else(|| Error::Counterexample(format!("{} contains no circuit through {a}", c.with(a))))?;
    let candidate = if partition.is_rainbow(c_prime) {
        c_prime
    } else {
        let parts = m.decompose_into_circuits(c ^ c_prime).ok_or_else(|| {
            Error::Counterexample(format!("{} is not a disjoint union of circuits", c ^ c_prime))
        })?;
        *parts.iter().find(|d| d.contains(a)).expect("decomposition covers a")
    };
    if candidate.len() >= c.len() || !partition.is_rainbow(candidate) {
        return Err(Error::Counterexample(format!(
            "shrinking {c} produced {candidate}, not a smaller rainbow circuit"
        )));
    }
    Ok(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, graphic, uniform};
    use crate::hypergraph::Family;

    fn fano() -> Matroid {
        projective_geometry(3, &FiniteField::new(2).unwrap()).unwrap()
    }

    #[test]
    fn circuit_colouring_examples() {
        let k4 = graphic(&complete_graph(4)).unwrap();
        assert_eq!(witness_circuit_colouring(&k4).unwrap().block_count(), 3);
        assert_eq!(witness_circuit_colouring(&uniform(1, 4).unwrap()).unwrap().block_count(), 1);
        assert_eq!(witness_circuit_colouring(&fano()).unwrap().block_count(), 3);
        assert!(witness_circuit_colouring(&uniform(3, 3).unwrap()).is_err());
        assert!(witness_circuit_colouring(&uniform(0, 2).unwrap()).is_err());
    }

    #[test]
    fn nonpaving_colouring() {
        let k5 = graphic(&complete_graph(5)).unwrap();
        assert_eq!(witness_nonpaving_bases_colouring(&k5).unwrap().block_count(), 4);
        assert!(matches!(witness_nonpaving_bases_colouring(&fano()), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn coline_colouring() {
        let k5 = graphic(&complete_graph(5)).unwrap();
        assert_eq!(witness_coline_bases_colouring(&k5).unwrap().block_count(), 4);
        assert_eq!(witness_coline_bases_colouring(&fano()).unwrap().block_count(), 2);
        assert!(witness_coline_bases_colouring(&uniform(1, 3).unwrap()).is_err());
    }

    #[test]
    fn hyperplane_colouring() {
        assert_eq!(witness_hyperplane_hc_colouring(&fano()).unwrap().block_count(), 4);
        let pg23 = projective_geometry(3, &FiniteField::new(3).unwrap()).unwrap();
        assert_eq!(witness_hyperplane_hc_colouring(&pg23).unwrap().block_count(), 5);
        assert!(witness_hyperplane_hc_colouring(&uniform(3, 3).unwrap()).is_err());
    }

    #[test]
    fn cp_lower_bound_block_counts() {
        let gf2 = FiniteField::new(2).unwrap();
        let gf3 = FiniteField::new(3).unwrap();
        assert_eq!(witness_cp_lower_bound(3, &gf2, 3).unwrap().block_count(), 3);
        assert_eq!(witness_cp_lower_bound(3, &gf2, 4).unwrap().block_count(), 4);
        assert_eq!(witness_cp_lower_bound(4, &gf2, 3).unwrap().block_count(), 4);
        assert_eq!(witness_cp_lower_bound(4, &gf2, 4).unwrap().block_count(), 5);
        assert_eq!(witness_cp_lower_bound(4, &gf2, 5).unwrap().block_count(), 8);
        assert_eq!(witness_cp_lower_bound(3, &gf3, 4).unwrap().block_count(), 5);
        assert!(witness_cp_lower_bound(3, &gf2, 5).is_err());
        assert!(Family::PCircuits(4).to_string().starts_with("pcircuits"));
    }

    #[test]
    fn shrink_on_fano() {
        let m = fano();
        let c = *m.circuits().iter().find(|c| c.len() == 4).unwrap();
        let mut labels = vec![0; 7];
        for (i, e) in c.iter().enumerate() {
            labels[e] = i;
        }
        let p = Partition::from_labels(&labels);
        let d = shrink_rainbow_circuit(&m, &p, c).unwrap();
        assert_eq!(d.len(), 3);
        assert!(p.is_rainbow(d));
        assert!(m.circuits().contains(&d));
        assert!(shrink_rainbow_circuit(&m, &Partition::single_block(7), c).is_err());
    }
}
