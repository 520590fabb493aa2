use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::witness::{
    shrink_rainbow_circuit, witness_circuit_colouring, witness_coline_bases_colouring,
    witness_cp_lower_bound, witness_hyperplane_hc_colouring, witness_nonpaving_bases_colouring,
};
use super::{predict, projective_params, Prediction, TheoremId};
use crate::catalog::{build, Instance, ZOO};
use crate::constructions::{FiniteField, BUILTIN_STEINER};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::hc::{check_rainbow_free, hc, HcValue, Partition, SearchConfig};
use crate::hypergraph::{circuits_view, hamiltonian_view, view};
use crate::matroid::Matroid;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub search: SearchConfig,
    /// Fixes `p` for theorems that take it; otherwise every admissible `p` is tried.
    pub p: Option<usize>,
    pub seed: u64,
    /// Random instances per matroid for the shrinking construction.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { search: SearchConfig::default(), p: None, seed: 0, samples: 100 }
    }
}

/// Outcome of checking one theorem on one parameter tuple.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: String,
    pub predicted: Prediction,
    /// `None` when the engine hit a resource cap.
    pub oracle: Option<String>,
    /// `None` when the oracle was inconclusive.
    #[serde(rename = "match")]
    pub matched: Option<bool>,
    pub nodes: u64,
    pub ms: u128,
    /// Rainbow-free partition found by the engine.
    pub witness: Option<Partition>,
    /// Colouring built from the matroid structure, already checked rainbow-free.
    pub certificate: Option<Partition>,
    pub note: Option<String>,
}

impl VerificationReport {
    pub const CSV_HEADER: &'static str = "theorem,params,predicted,oracle,match,nodes,ms";

    pub fn csv_row(&self) -> String {
        let field = |s: &str| {
            if s.contains([',', '"']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.into()
            }
        };
        format!(
            "{},{},{},{},{},{},{}",
            self.theorem,
            field(&self.params),
            field(&self.predicted.to_string()),
            self.oracle.as_deref().unwrap_or("inconclusive"),
            self.matched.map_or("inconclusive".into(), |m| m.to_string()),
            self.nodes,
            self.ms
        )
    }
}

/// `p` values to try on an instance.
fn p_values(id: TheoremId, inst: &Instance, fixed: Option<usize>) -> Vec<Option<usize>> {
    if !id.needs_p() {
        return vec![None];
    }
    if let Some(p) = fixed {
        return vec![Some(p)];
    }
    let r = inst.matroid.rank();
    match id {
        TheoremId::PflatsPaving => (1..r.saturating_sub(1)).map(Some).collect(),
        _ => (3..=r + 1).map(Some).collect(),
    }
}

fn default_specs(id: TheoremId) -> Vec<String> {
    let mut specs = default_specs_raw(id);
    let mut seen = std::collections::HashSet::new();
    specs.retain(|s| seen.insert(s.clone()));
    specs
}

fn default_specs_raw(id: TheoremId) -> Vec<String> {
    let zoo = ZOO.iter().map(|s| s.to_string());
    let list = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let steiner = || BUILTIN_STEINER.iter().map(|s| format!("steiner:{s}"));
    match id {
        TheoremId::CircuitsRank | TheoremId::Cocircuits | TheoremId::PavingConverse => {
            zoo.chain(list(&["graph:W4", "graph:C5", "uniform:1,3"])).collect()
        }
        TheoremId::BasesColine => zoo.chain(list(&["graph:W4", "graph:W5", "uniform:2,2"])).collect(),
        TheoremId::BasesPaving | TheoremId::PflatsPaving => {
            zoo.chain(list(&["uniform:4,6", "uniform:5,7"])).chain(steiner()).collect()
        }
        TheoremId::C3ProjPlane | TheoremId::HcProjPlane => list(&["pg:3,2", "pg:3,3"]),
        TheoremId::C3ProjGeom => list(&["pg:2,3", "pg:3,2", "pg:3,3", "pg:4,2"]),
        TheoremId::BinaryShrink => list(&["pg:3,2", "pg:4,2", "graph:K4", "graph:K5"]),
        TheoremId::HcLower => zoo.chain(steiner()).collect(),
        TheoremId::SteinerHamiltonian => steiner().collect(),
        TheoremId::SteinerHc => steiner().chain(list(&["pg:3,2", "pg:3,3"])).collect(),
        TheoremId::CpConjecture => list(&["pg:3,2", "pg:3,3", "pg:4,2"]),
    }
}

/// The standard parameter range of a theorem, restricted to applicable tuples.
pub fn default_instances(id: TheoremId) -> Result<Vec<(Instance, Option<usize>)>> {
    let mut out = Vec::new();
    for spec in default_specs(id) {
        let inst = build(&spec)?;
        for p in p_values(id, &inst, None) {
            if predict(id, &inst, p).is_ok() {
                out.push((inst.clone(), p));
            }
        }
    }
    Ok(out)
}

/// A Hamiltonian circuit and an `(r+1)`-block colouring under which it is rainbow.
pub fn random_shrink_instance<R: Rng>(m: &Matroid, rng: &mut R) -> Result<(Partition, ElemSet)> {
    let r = m.rank();
    let ham: Vec<ElemSet> = m.circuits().iter().copied().filter(|c| c.len() == r + 1).collect();
    let &c = ham.choose(rng).ok_or_else(|| Error::Precondition("no Hamiltonian circuit".into()))?;
    let mut colours: Vec<usize> = (0..=r).collect();
    for i in (1..colours.len()).rev() {
        colours.swap(i, rng.random_range(0..=i));
    }
    let mut labels = vec![0; m.n()];
    for (e, &col) in c.iter().zip(&colours) {
        labels[e] = col;
    }
    for e in m.ground() - c {
        labels[e] = rng.random_range(0..=r);
    }
    Ok((Partition::from_labels(&labels), c))
}

fn certificate(id: TheoremId, inst: &Instance, p: Option<usize>) -> Result<Option<Partition>> {
    let m = &inst.matroid;
    Ok(match id {
        TheoremId::CircuitsRank | TheoremId::C3ProjGeom | TheoremId::C3ProjPlane => {
            Some(witness_circuit_colouring(m)?)
        }
        TheoremId::Cocircuits => {
            let w = witness_circuit_colouring(&m.dual())?;
            // circuits of the dual are the cocircuits
            debug_assert!(check_rainbow_free(&circuits_view(&m.dual())?, &w));
            Some(w)
        }
        TheoremId::BasesColine => Some(witness_coline_bases_colouring(m)?),
        TheoremId::PavingConverse if !m.is_paving() => Some(witness_nonpaving_bases_colouring(m)?),
        TheoremId::HcLower | TheoremId::HcProjPlane | TheoremId::SteinerHc => {
            Some(witness_hyperplane_hc_colouring(m)?)
        }
        TheoremId::CpConjecture => {
            let (r, q) = projective_params(inst).expect("checked by predict");
            Some(witness_cp_lower_bound(r, &FiniteField::new(q.0)?, p.expect("checked by predict"))?)
        }
        _ => None,
    })
}

/// Checks one theorem on one instance against the exact engine.
pub fn verify_instance(
    id: TheoremId,
    inst: &Instance,
    p: Option<usize>,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let predicted = predict(id, inst, p)?;
    let params = match p {
        Some(p) => format!("{};p={p}", inst.label),
        None => inst.label.clone(),
    };
    let start = Instant::now();
    let cert = certificate(id, inst, p)?;
    let m = &inst.matroid;
    let mut report = VerificationReport {
        theorem: id.name().into(),
        params,
        predicted,
        oracle: None,
        matched: None,
        nodes: 0,
        ms: 0,
        witness: None,
        certificate: cert.clone(),
        note: None,
    };

    match id {
        TheoremId::BinaryShrink => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let mut ok = true;
            for _ in 0..opts.samples {
                let (partition, c) = random_shrink_instance(m, &mut rng)?;
                match shrink_rainbow_circuit(m, &partition, c) {
                    Ok(_) => {}
                    Err(Error::Counterexample(msg)) => {
                        ok = false;
                        report.note = Some(msg);
                        break;
                    }
                    Err(e) => return Err(e),
                }
                report.nodes += 1;
            }
            report.oracle = Some(ok.to_string());
            report.matched = Some(predicted == Prediction::Holds(ok));
        }
        TheoremId::SteinerHamiltonian => {
            let h = hamiltonian_view(m)?;
            let holds = !h.is_empty();
            report.oracle = Some(holds.to_string());
            report.note = Some(format!("{} Hamiltonian circuits", h.edges().len()));
            report.matched = Some(predicted == Prediction::Holds(holds));
        }
        _ => {
            let family = id.family(p).expect("hc-valued theorem");
            let h = view(m, family)?;
            match hc(&h, &opts.search) {
                Ok(out) => {
                    report.nodes = out.stats.nodes;
                    report.oracle = Some(out.value.to_string());
                    if let (Some(c), HcValue::Value(v)) = (&cert, out.value) {
                        if c.block_count() + 1 > v {
                            return Err(Error::Internal(format!(
                                "certificate with {} blocks exceeds engine maximum {}",
                                c.block_count(),
                                v - 1
                            )));
                        }
                    }
                    report.matched = Some(match (predicted, out.value) {
                        (Prediction::Exact(t), HcValue::Value(v)) => t == v,
                        (Prediction::AtLeast(t), HcValue::Value(v)) => v >= t,
                        (Prediction::Holds(b), HcValue::Value(v)) => b == (v == m.rank()),
                        (_, HcValue::NoHyperedges) => false,
                    });
                    report.witness = out.witness;
                }
                Err(Error::Inconclusive { nodes, best }) => {
                    report.nodes = nodes;
                    report.note = Some(format!("inconclusive; best rainbow-free block count {best}"));
                }
                Err(e) => return Err(e),
            }
        }
    }
    report.ms = start.elapsed().as_millis();
    Ok(report)
}

/// Checks `id` on each instance, expanding `p` where needed.
pub fn verify(
    id: TheoremId,
    instances: &[Instance],
    opts: &VerifyOptions,
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for inst in instances {
        for p in p_values(id, inst, opts.p) {
            out.push(verify_instance(id, inst, p, opts)?);
        }
    }
    Ok(out)
}
