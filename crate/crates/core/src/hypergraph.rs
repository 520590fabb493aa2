//! Hypergraphs on the ground set of a matroid: circuits, cocircuits, bases,
//! `p`-circuits, Hamiltonian circuits and `p`-element flats.

use std::fmt;
use std::str::FromStr;

use crate::elemset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Views are materialized; anything with more edges than this is refused.
pub const EDGE_CAP: usize = 1 << 20;

/// Which hyperedges a view takes from its matroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Circuits,
    Cocircuits,
    Bases,
    PCircuits(usize),
    Hamiltonian,
    PFlats(usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Circuits => write!(f, "circuits"),
            Family::Cocircuits => write!(f, "cocircuits"),
            Family::Bases => write!(f, "bases"),
            Family::PCircuits(p) => write!(f, "pcircuits:{p}"),
            Family::Hamiltonian => write!(f, "hamiltonian"),
            Family::PFlats(p) => write!(f, "flats:{p}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let param = |rest: &str| -> Result<usize> {
            rest.trim().parse().map_err(|_| Error::Parse(format!("bad family parameter in {s:?}")))
        };
        match s.trim().split_once(':') {
            None => match s.trim() {
                "circuits" => Ok(Family::Circuits),
                "cocircuits" => Ok(Family::Cocircuits),
                "bases" => Ok(Family::Bases),
                "hamiltonian" => Ok(Family::Hamiltonian),
                other => Err(Error::Parse(format!("unknown family selector {other:?}"))),
            },
            Some(("pcircuits", rest)) => Ok(Family::PCircuits(param(rest)?)),
            Some(("flats", rest)) => Ok(Family::PFlats(param(rest)?)),
            Some(_) => Err(Error::Parse(format!("unknown family selector {s:?}"))),
        }
    }
}

/// Vertex set `{0, .., n-1}` and a sorted, duplicate-free edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n_vertices: usize,
    edges: Vec<ElemSet>,
    family: Option<Family>,
}

impl Hypergraph {
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = ElemSet>) -> Result<Self> {
        Self::build(n_vertices, edges.into_iter().collect(), None)
    }

    fn build(n_vertices: usize, mut edges: Vec<ElemSet>, family: Option<Family>) -> Result<Self> {
        if n_vertices > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n_vertices));
        }
        let ground = ElemSet::full(n_vertices);
        for e in &edges {
            if e.is_empty() {
                return Err(Error::DegenerateView("empty hyperedge".into()));
            }
            if !e.is_subset(ground) {
                return Err(Error::ElementOutOfRange { elem: (*e - ground).min().unwrap(), n: n_vertices });
            }
        }
        if edges.len() > EDGE_CAP {
            return Err(Error::ResourceCap(format!("{} hyperedges exceed the cap {EDGE_CAP}", edges.len())));
        }
        edges.sort();
        edges.dedup();
        Ok(Hypergraph { n_vertices, edges, family })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[ElemSet] {
        &self.edges
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Same vertices, only the edges accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(ElemSet) -> bool) -> Hypergraph {
        Hypergraph {
            n_vertices: self.n_vertices,
            edges: self.edges.iter().copied().filter(|e| keep(*e)).collect(),
            family: None,
        }
    }
}

pub fn view(m: &Matroid, family: Family) -> Result<Hypergraph> {
    match family {
        Family::Circuits => circuits_view(m),
        Family::Cocircuits => cocircuits_view(m),
        Family::Bases => bases_view(m),
        Family::PCircuits(p) => p_circuits_view(m, p),
        Family::Hamiltonian => hamiltonian_view(m),
        Family::PFlats(p) => p_flats_view(m, p),
    }
}

pub fn circuits_view(m: &Matroid) -> Result<Hypergraph> {
    Hypergraph::build(m.n(), m.circuits().to_vec(), Some(Family::Circuits))
}

pub fn cocircuits_view(m: &Matroid) -> Result<Hypergraph> {
    Hypergraph::build(m.n(), m.dual().circuits().to_vec(), Some(Family::Cocircuits))
}

pub fn bases_view(m: &Matroid) -> Result<Hypergraph> {
    let (n, r) = (m.n(), m.rank());
    if r == 0 {
        return Err(Error::DegenerateView("a rank-0 matroid has only the empty basis".into()));
    }
    let candidates = binomial(n, r);
    if candidates > (EDGE_CAP as u128) << 4 {
        return Err(Error::ResourceCap(format!("C({n},{r}) basis candidates")));
    }
    let mut edges = Vec::new();
    for s in ElemSet::k_subsets(n, r) {
        if m.rank_of(s) == r {
            edges.push(s);
            if edges.len() > EDGE_CAP {
                return Err(Error::ResourceCap(format!("more than {EDGE_CAP} bases")));
            }
        }
    }
    Hypergraph::build(n, edges, Some(Family::Bases))
}

pub fn p_circuits_view(m: &Matroid, p: usize) -> Result<Hypergraph> {
    if p == 0 {
        return Err(Error::DegenerateView("p must be at least 1".into()));
    }
    let edges = m.circuits().iter().copied().filter(|c| c.len() == p).collect();
    Hypergraph::build(m.n(), edges, Some(Family::PCircuits(p)))
}

/// Circuits of size `r+1`.
pub fn hamiltonian_view(m: &Matroid) -> Result<Hypergraph> {
    let edges = m.circuits().iter().copied().filter(|c| c.len() == m.rank() + 1).collect();
    Hypergraph::build(m.n(), edges, Some(Family::Hamiltonian))
}

/// Flats of any rank with exactly `p` elements.
pub fn p_flats_view(m: &Matroid, p: usize) -> Result<Hypergraph> {
    if p == 0 {
        return Err(Error::DegenerateView("flats of size 0 would be empty hyperedges".into()));
    }
    let edges = m.flats().iter().flatten().copied().filter(|f| f.len() == p).collect();
    Hypergraph::build(m.n(), edges, Some(Family::PFlats(p)))
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, graphic, projective_geometry, uniform, FiniteField};

    fn fano() -> Matroid {
        projective_geometry(3, &FiniteField::new(2).unwrap()).unwrap()
    }

    #[test]
    fn selector_grammar() {
        for s in ["circuits", "cocircuits", "bases", "pcircuits:3", "hamiltonian", "flats:2"] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
        assert!("pcircuits:x".parse::<Family>().is_err());
        assert!("cycles".parse::<Family>().is_err());
    }

    #[test]
    fn circuits_view_examples() {
        assert!(circuits_view(&uniform(4, 4).unwrap()).unwrap().is_empty());
        let with_loop = uniform(0, 2).unwrap();
        assert!(circuits_view(&with_loop).unwrap().edges().iter().any(|e| e.len() == 1));
        let h = circuits_view(&fano()).unwrap();
        assert_eq!(h.edges().iter().filter(|e| e.len() == 3).count(), 7);
        assert_eq!(h.edges().iter().filter(|e| e.len() == 4).count(), 7);
    }

    #[test]
    fn cocircuits_view_examples() {
        assert!(cocircuits_view(&uniform(0, 4).unwrap()).unwrap().is_empty());
        let k4 = graphic(&complete_graph(4)).unwrap();
        assert_eq!(cocircuits_view(&k4).unwrap().edges(), circuits_view(&k4.dual()).unwrap().edges());
    }

    #[test]
    fn bases_view_examples() {
        assert_eq!(bases_view(&uniform(2, 3).unwrap()).unwrap().edges().len(), 3);
        assert_eq!(bases_view(&fano()).unwrap().edges().len(), 28);
        assert!(matches!(bases_view(&uniform(0, 3).unwrap()), Err(Error::DegenerateView(_))));
    }

    #[test]
    fn p_circuits_examples() {
        let f = fano();
        let lines = p_circuits_view(&f, 3).unwrap();
        assert_eq!(lines.edges(), f.flats_of_rank(2).unwrap());
        assert_eq!(p_circuits_view(&f, 4).unwrap().edges().len(), 7);
        assert!(p_circuits_view(&f, 5).unwrap().is_empty());
        assert_eq!(hamiltonian_view(&f).unwrap().edges(), p_circuits_view(&f, 4).unwrap().edges());
    }

    #[test]
    fn hamiltonian_examples() {
        let u = uniform(2, 5).unwrap();
        assert_eq!(hamiltonian_view(&u).unwrap().edges().len(), 10);
        assert!(hamiltonian_view(&uniform(3, 3).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn p_flats_examples() {
        let f = fano();
        assert_eq!(p_flats_view(&f, 3).unwrap().edges(), f.flats_of_rank(2).unwrap());
        assert!(p_flats_view(&f, 2).unwrap().is_empty());
        let u = uniform(5, 7).unwrap();
        assert_eq!(p_flats_view(&u, 2).unwrap().edges().len(), 21);
        assert!(p_flats_view(&f, 0).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Hypergraph::new(3, [ElemSet::EMPTY]).is_err());
        assert!(Hypergraph::new(3, [ElemSet::singleton(3)]).is_err());
        let h = Hypergraph::new(3, [ElemSet::full(2), ElemSet::full(2)]).unwrap();
        assert_eq!(h.edges().len(), 1);
    }
}
