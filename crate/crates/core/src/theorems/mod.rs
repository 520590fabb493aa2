//! Closed-form `hc` values for matroid hypergraphs, colourings that certify
//! their lower bounds, and a harness that checks both against the exact engine.
//!
//! Two different quantities are both written `q` in the literature on this
//! topic. Predictors here never mix them: [`FieldOrder`] is the order of the
//! field of a projective geometry, [`HyperplaneSize`] the cardinality of the
//! largest hyperplane.

mod explore;
mod verify;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use explore::{explore_cp_conjecture, ConjectureReport};
pub use verify::{
    default_instances, random_shrink_instance, verify, verify_instance, VerificationReport, VerifyOptions,
};
pub use witness::{
    shrink_rainbow_circuit, witness_circuit_colouring, witness_coline_bases_colouring,
    witness_cp_lower_bound, witness_hyperplane_hc_colouring, witness_nonpaving_bases_colouring,
};

use crate::catalog::{Instance, Origin};
use crate::constructions::{steiner_hamiltonicity_bound, SteinerSystem};
use crate::error::{Error, Result};
use crate::hypergraph::Family;
use crate::matroid::Matroid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    CircuitsRank,
    Cocircuits,
    BasesColine,
    BasesPaving,
    PavingConverse,
    C3ProjPlane,
    C3ProjGeom,
    BinaryShrink,
    HcLower,
    HcProjPlane,
    SteinerHamiltonian,
    SteinerHc,
    PflatsPaving,
    CpConjecture,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::CircuitsRank,
        TheoremId::Cocircuits,
        TheoremId::BasesColine,
        TheoremId::BasesPaving,
        TheoremId::PavingConverse,
        TheoremId::C3ProjPlane,
        TheoremId::C3ProjGeom,
        TheoremId::BinaryShrink,
        TheoremId::HcLower,
        TheoremId::HcProjPlane,
        TheoremId::SteinerHamiltonian,
        TheoremId::SteinerHc,
        TheoremId::PflatsPaving,
        TheoremId::CpConjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::CircuitsRank => "circuits-rank",
            TheoremId::Cocircuits => "cocircuits",
            TheoremId::BasesColine => "bases-coline",
            TheoremId::BasesPaving => "bases-paving",
            TheoremId::PavingConverse => "paving-converse",
            TheoremId::C3ProjPlane => "c3-proj-plane",
            TheoremId::C3ProjGeom => "c3-proj-geom",
            TheoremId::BinaryShrink => "binary-shrink",
            TheoremId::HcLower => "hc-lower",
            TheoremId::HcProjPlane => "hc-proj-plane",
            TheoremId::SteinerHamiltonian => "steiner-hamiltonian",
            TheoremId::SteinerHc => "steiner-hc",
            TheoremId::PflatsPaving => "pflats-paving",
            TheoremId::CpConjecture => "cp-conjecture",
        }
    }

    /// One-line statement, shown by `verify --help` and in reports.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::CircuitsRank => "loopless, not free: hc(C(M)) = r+1",
            TheoremId::Cocircuits => "coloopless, rank > 0: hc(C*(M)) = n-r+1",
            TheoremId::BasesColine => "rank >= 2: hc(B(M)) = n - t2 + 2, t2 the smallest coline complement",
            TheoremId::BasesPaving => "paving: hc(B(M)) = r",
            TheoremId::PavingConverse => "hc(B(M)) = r exactly when M is paving",
            TheoremId::C3ProjPlane => "hc(C_3(PG(2,q))) = 4",
            TheoremId::C3ProjGeom => "hc(C_3(PG(r-1,q))) = r+1",
            TheoremId::BinaryShrink => {
                "simple binary Hamiltonian: a rainbow Hamiltonian circuit yields a smaller rainbow circuit"
            }
            TheoremId::HcLower => "Hamiltonian, largest hyperplane of size h: hc(HC(M)) >= h+2",
            TheoremId::HcProjPlane => "hc(HC(PG(2,q))) = q+3",
            TheoremId::SteinerHamiltonian => {
                "S(t,k,n) with n > (t+1)(k+1-t): the paving matroid is Hamiltonian"
            }
            TheoremId::SteinerHc => "Steiner S(r-1,k,n) paving matroid, r odd: hc(HC(M)) = k+2",
            TheoremId::PflatsPaving => "paving, p < r-1: hc(F(M,p)) = p",
            TheoremId::CpConjecture => "conjectured hc(C_p(PG(r-1,q))) = (q^(p-2)-1)/(q-1) + (r-p+1) + 1",
        }
    }

    /// The hypergraph the exact engine is run on, or `None` for statements
    /// that are not `hc` values.
    pub fn family(self, p: Option<usize>) -> Option<Family> {
        match self {
            TheoremId::CircuitsRank => Some(Family::Circuits),
            TheoremId::Cocircuits => Some(Family::Cocircuits),
            TheoremId::BasesColine | TheoremId::BasesPaving | TheoremId::PavingConverse => {
                Some(Family::Bases)
            }
            TheoremId::C3ProjPlane | TheoremId::C3ProjGeom => Some(Family::PCircuits(3)),
            TheoremId::HcLower | TheoremId::HcProjPlane | TheoremId::SteinerHc => Some(Family::Hamiltonian),
            TheoremId::PflatsPaving => p.map(Family::PFlats),
            TheoremId::CpConjecture => p.map(Family::PCircuits),
            TheoremId::BinaryShrink | TheoremId::SteinerHamiltonian => None,
        }
    }

    /// Whether the statement takes the extra parameter `p`.
    pub fn needs_p(self) -> bool {
        matches!(self, TheoremId::PflatsPaving | TheoremId::CpConjecture)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        if key == "cp-pg" {
            return Ok(TheoremId::CpConjecture);
        }
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| Error::Parse(format!("unknown theorem {s:?}")))
    }
}

/// Order of the field of a projective geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldOrder(pub u32);

/// Cardinality of a largest hyperplane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperplaneSize(pub usize);

/// What a theorem says about an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Prediction {
    Exact(usize),
    AtLeast(usize),
    Holds(bool),
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Exact(v) => write!(f, "{v}"),
            Prediction::AtLeast(v) => write!(f, ">={v}"),
            Prediction::Holds(b) => write!(f, "{b}"),
        }
    }
}

fn not_applicable(id: TheoremId, inst: &Instance, why: &str) -> Error {
    Error::NotApplicable(format!("{id} on {}: {why}", inst.label))
}

/// Field order of a projective geometry instance.
pub fn projective_params(inst: &Instance) -> Option<(usize, FieldOrder)> {
    match inst.origin {
        Origin::Projective { rank, q } => Some((rank, FieldOrder(q))),
        _ => None,
    }
}

pub fn largest_hyperplane(m: &Matroid) -> Option<HyperplaneSize> {
    m.hyperplanes().iter().map(|h| h.len()).max().map(HyperplaneSize)
}

/// Block size of the Steiner system whose blocks are the hyperplanes of `m`,
/// when `m` is such a paving matroid.
pub fn steiner_block_size(inst: &Instance) -> Option<(usize, usize, usize)> {
    if let Origin::Steiner { t, k, n } = inst.origin {
        return Some((t, k, n));
    }
    let m = &inst.matroid;
    if m.rank() < 3 || !m.is_paving() || !m.is_simple() {
        return None;
    }
    SteinerSystem::from_hyperplanes(m).ok().map(|s| (s.t(), s.k(), s.n()))
}

/// The two readings of `t2` (smallest coline complement, and `n` minus the
/// largest coline); they must agree.
pub fn t2(m: &Matroid) -> Result<usize> {
    let by_complement = m.smallest_coline_complement()?;
    let by_largest = m.n() - m.largest_coline_size()?;
    if by_complement != by_largest {
        return Err(Error::Internal(format!(
            "t2 readings disagree: {by_complement} (smallest complement) vs {by_largest} (n - largest coline)"
        )));
    }
    Ok(by_complement)
}

/// Printed value of the `C_p(PG(r-1,q))` conjecture.
pub fn cp_conjecture_value(p: usize, r: usize, q: FieldOrder) -> Result<usize> {
    if p < 3 || p > r + 1 {
        return Err(Error::NotApplicable(format!("need 3 <= p <= r+1, got p={p}, r={r}")));
    }
    let q = q.0 as usize;
    let flat = (q.pow(p as u32 - 2) - 1) / (q - 1);
    Ok(flat + (r + 1 - p) + 1)
}

pub fn predict(id: TheoremId, inst: &Instance, p: Option<usize>) -> Result<Prediction> {
    let m = &inst.matroid;
    let (n, r) = (m.n(), m.rank());
    let na = |why: &str| not_applicable(id, inst, why);
    match id {
        TheoremId::CircuitsRank => {
            if !m.is_loopless() {
                return Err(na("has a loop"));
            }
            if m.is_free() {
                return Err(na("free matroid"));
            }
            Ok(Prediction::Exact(r + 1))
        }
        TheoremId::Cocircuits => {
            if !m.coloops().is_empty() {
                return Err(na("has a coloop"));
            }
            if r == 0 {
                return Err(na("rank 0"));
            }
            Ok(Prediction::Exact(n - r + 1))
        }
        TheoremId::BasesColine => {
            if r < 2 {
                return Err(na("rank below 2 has no colines"));
            }
            Ok(Prediction::Exact(n - t2(m)? + 2))
        }
        TheoremId::BasesPaving => {
            if r == 0 {
                return Err(na("rank 0"));
            }
            if !m.is_paving() {
                return Err(na("not paving"));
            }
            Ok(Prediction::Exact(r))
        }
        TheoremId::PavingConverse => {
            if r == 0 {
                return Err(na("rank 0"));
            }
            Ok(Prediction::Holds(m.is_paving()))
        }
        TheoremId::C3ProjPlane => match projective_params(inst) {
            Some((3, _)) => Ok(Prediction::Exact(4)),
            _ => Err(na("not a projective plane")),
        },
        TheoremId::C3ProjGeom => match projective_params(inst) {
            Some((rank, _)) if rank >= 2 => Ok(Prediction::Exact(rank + 1)),
            _ => Err(na("not a projective geometry of rank >= 2")),
        },
        TheoremId::BinaryShrink => {
            if !m.is_simple() || !m.is_binary() {
                return Err(na("not simple and binary"));
            }
            if !m.circuits().iter().any(|c| c.len() == r + 1) {
                return Err(na("no Hamiltonian circuit"));
            }
            if n <= r + 1 {
                return Err(na("no element outside a Hamiltonian circuit"));
            }
            Ok(Prediction::Holds(true))
        }
        TheoremId::HcLower => {
            if !m.circuits().iter().any(|c| c.len() == r + 1) {
                return Err(na("no Hamiltonian circuit"));
            }
            let h = largest_hyperplane(m).ok_or_else(|| na("no hyperplanes"))?;
            Ok(Prediction::AtLeast(h.0 + 2))
        }
        TheoremId::HcProjPlane => match projective_params(inst) {
            Some((3, FieldOrder(q))) => Ok(Prediction::Exact(q as usize + 3)),
            _ => Err(na("not a projective plane")),
        },
        TheoremId::SteinerHamiltonian => {
            let (t, k, n) = steiner_block_size(inst).ok_or_else(|| na("not a Steiner paving matroid"))?;
            if !(2 <= t && t < k && k < n) || !steiner_hamiltonicity_bound(t, k, n)? {
                return Err(na("n <= (t+1)(k+1-t)"));
            }
            Ok(Prediction::Holds(true))
        }
        TheoremId::SteinerHc => {
            let (t, k, _) = steiner_block_size(inst).ok_or_else(|| na("not a Steiner paving matroid"))?;
            if (t + 1) % 2 == 0 {
                return Err(na("rank is even"));
            }
            Ok(Prediction::Exact(k + 2))
        }
        TheoremId::PflatsPaving => {
            let p = p.ok_or_else(|| na("needs p"))?;
            if !m.is_paving() {
                return Err(na("not paving"));
            }
            if p == 0 || p + 1 >= r {
                return Err(na("needs 1 <= p < r-1"));
            }
            Ok(Prediction::Exact(p))
        }
        TheoremId::CpConjecture => {
            let p = p.ok_or_else(|| na("needs p"))?;
            let (rank, q) = projective_params(inst).ok_or_else(|| na("not a projective geometry"))?;
            Ok(Prediction::Exact(cp_conjecture_value(p, rank, q)?))
        }
    }
}
