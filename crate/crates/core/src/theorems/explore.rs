use std::fmt;
use std::time::Instant;

use serde::Serialize;

use super::witness::witness_cp_lower_bound;
use super::{cp_conjecture_value, FieldOrder};
use crate::constructions::{projective_geometry, FiniteField};
use crate::error::{Error, Result};
use crate::hc::{hc, SearchConfig};
use crate::hypergraph::p_circuits_view;

/// Conjectured, proven, constructed and computed values of `hc(C_p(PG(r-1,q)))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub p: usize,
    pub r: usize,
    pub q: u32,
    pub conjecture: usize,
    /// `r+1`, proven for `p = 3`.
    pub theorem: Option<usize>,
    /// One more than the block count of the flat-plus-contraction colouring.
    pub construction: usize,
    /// Exact value from the engine; `None` if inconclusive.
    pub oracle: Option<usize>,
    pub nodes: u64,
    pub ms: u128,
    pub discrepancy: bool,
}

impl ConjectureReport {
    pub fn verdict(&self) -> &'static str {
        match (self.discrepancy, self.oracle) {
            (true, _) => "discrepancy",
            (false, Some(_)) => "consistent",
            (false, None) => "inconclusive",
        }
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "C_{}(PG({},{}))", self.p, self.r - 1, self.q)?;
        writeln!(f, "  conjecture:   {}", self.conjecture)?;
        match self.theorem {
            Some(t) => writeln!(f, "  theorem (p=3): {t}")?,
            None => writeln!(f, "  theorem (p=3): n/a")?,
        }
        writeln!(f, "  construction: >= {}", self.construction)?;
        match self.oracle {
            Some(o) => writeln!(f, "  oracle:       {o}")?,
            None => writeln!(f, "  oracle:       inconclusive")?,
        }
        write!(f, "  verdict:      {}", self.verdict())
    }
}

pub fn explore_cp_conjecture(p: usize, r: usize, q: u32, cfg: &SearchConfig) -> Result<ConjectureReport> {
    let conjecture = cp_conjecture_value(p, r, FieldOrder(q))?;
    let field = FiniteField::new(q)?;
    let start = Instant::now();
    let construction = witness_cp_lower_bound(r, &field, p)?.block_count() + 1;
    let m = projective_geometry(r, &field)?;
    let h = p_circuits_view(&m, p)?;
    let (oracle, nodes) = match hc(&h, cfg) {
        Ok(out) => (out.value.value(), out.stats.nodes),
        Err(Error::Inconclusive { nodes, .. }) => (None, nodes),
        Err(e) => return Err(e),
    };
    let theorem = (p == 3).then_some(r + 1);
    let discrepancy = theorem.is_some_and(|t| t != conjecture) || oracle.is_some_and(|o| o != conjecture);
    Ok(ConjectureReport {
        p,
        r,
        q,
        conjecture,
        theorem,
        construction,
        oracle,
        nodes,
        ms: start.elapsed().as_millis(),
        discrepancy,
    })
}
