use serde::{Deserialize, Serialize};

use super::Matroid;
use crate::constructions::{linear_matroid, FiniteField};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// JSON exchange format.
///
/// Circuit form: `{"n": 4, "kind": "circuits", "circuits": [[0,1,2], ...]}`.
/// Linear form: `{"kind": "linear", "field": 3, "matrix": [[...], ...]}` where
/// the matrix is given row by row and its columns are the elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidExchange {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<u8>>>,
}

impl MatroidExchange {
    /// Circuit form of any matroid.
    pub fn from_matroid(m: &Matroid) -> Self {
        MatroidExchange {
            n: Some(m.n()),
            kind: Some("circuits".into()),
            circuits: Some(m.circuits().iter().map(|c| c.to_vec()).collect()),
            field: None,
            matrix: None,
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        let linear = match self.kind.as_deref() {
            Some("linear") => true,
            Some("circuits") => false,
            None => self.matrix.is_some(),
            Some(other) => return Err(Error::Parse(format!("unknown matroid kind {other:?}"))),
        };
        if linear {
            let q = self.field.ok_or_else(|| Error::Parse("linear matroid needs \"field\"".into()))?;
            let rows =
                self.matrix.as_ref().ok_or_else(|| Error::Parse("linear matroid needs \"matrix\"".into()))?;
            let width = rows.first().map(Vec::len).unwrap_or(0);
            if rows.iter().any(|r| r.len() != width) {
                return Err(Error::Parse("matrix rows have different lengths".into()));
            }
            if let Some(n) = self.n {
                if n != width {
                    return Err(Error::Parse(format!("\"n\" is {n} but the matrix has {width} columns")));
                }
            }
            let columns = (0..width).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
            linear_matroid(&FiniteField::new(q)?, columns)
        } else {
            let n = self.n.ok_or_else(|| Error::Parse("circuit matroid needs \"n\"".into()))?;
            let circuits = self
                .circuits
                .as_ref()
                .ok_or_else(|| Error::Parse("circuit matroid needs \"circuits\"".into()))?
                .iter()
                .map(|c| ElemSet::try_from_elems(n, c.iter().copied()))
                .collect::<Result<Vec<_>>>()?;
            Matroid::from_circuits(n, &circuits)
        }
    }

    pub fn parse(text: &str) -> Result<Matroid> {
        serde_json::from_str::<MatroidExchange>(text)?.to_matroid()
    }
}
