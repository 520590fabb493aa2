//! Named matroids and the `kind:args` spec grammar shared by the CLI and examples.
//!
//! | spec | matroid |
//! |------|---------|
//! | `uniform:r,n` | `U_{r,n}` |
//! | `free:n` | `U_{n,n}` |
//! | `graph:K5`, `graph:W4`, `graph:C6` | complete graph, wheel, cycle |
//! | `pg:r,q` | rank-`r` projective geometry `PG(r-1,q)` |
//! | `ag:d,q` | affine geometry `AG(d,q)` (rank `d+1`) |
//! | `steiner:S(2,3,9)` | paving matroid of a builtin Steiner system |
//! | `file:path.json` | exchange JSON |

use std::fmt;
use std::str::FromStr;

use crate::constructions::{
    affine_geometry, complete_graph, cycle_graph, graphic, projective_geometry, steiner_matroid, uniform,
    wheel, FiniteField, SteinerSystem,
};
use crate::error::{Error, Result};
use crate::matroid::{Matroid, MatroidExchange};

/// How an instance was built; theorems use this to read off parameters such
/// as the field order that the rank oracle alone does not expose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Generic,
    Uniform { r: usize, n: usize },
    Graphic(GraphKind),
    Projective { rank: usize, q: u32 },
    Affine { dim: usize, q: u32 },
    Steiner { t: usize, k: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Complete(usize),
    Wheel(usize),
    Cycle(usize),
}

/// A parsed matroid spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidSpec {
    Uniform { r: usize, n: usize },
    Graph(GraphKind),
    Projective { rank: usize, q: u32 },
    Affine { dim: usize, q: u32 },
    Steiner(String),
    File(String),
}

fn int_list(kind: &str, args: &str, want: usize) -> Result<Vec<usize>> {
    let vals = args
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::Parse(format!("{kind}: expected comma-separated integers, got {args:?}")))?;
    if vals.len() != want {
        return Err(Error::Parse(format!("{kind}: expected {want} integers, got {}", vals.len())));
    }
    Ok(vals)
}

impl FromStr for MatroidSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("matroid spec {s:?} lacks kind:args")))?;
        match kind {
            "uniform" | "u" => {
                let v = int_list(kind, args, 2)?;
                Ok(MatroidSpec::Uniform { r: v[0], n: v[1] })
            }
            "free" => {
                let v = int_list(kind, args, 1)?;
                Ok(MatroidSpec::Uniform { r: v[0], n: v[0] })
            }
            "graph" => {
                let args = args.trim();
                let (letter, num) = args.split_at(args.char_indices().nth(1).map_or(args.len(), |(i, _)| i));
                let k: usize = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("graph: expected K<n>, W<n> or C<n>, got {args:?}")))?;
                let g = match letter {
                    "K" => GraphKind::Complete(k),
                    "W" => GraphKind::Wheel(k),
                    "C" => GraphKind::Cycle(k),
                    _ => return Err(Error::Parse(format!("graph: unknown family {letter:?}"))),
                };
                Ok(MatroidSpec::Graph(g))
            }
            "pg" => {
                let v = int_list(kind, args, 2)?;
                Ok(MatroidSpec::Projective { rank: v[0], q: v[1] as u32 })
            }
            "ag" => {
                let v = int_list(kind, args, 2)?;
                Ok(MatroidSpec::Affine { dim: v[0], q: v[1] as u32 })
            }
            "steiner" => Ok(MatroidSpec::Steiner(args.trim().to_string())),
            "file" => Ok(MatroidSpec::File(args.to_string())),
            other => Err(Error::Parse(format!("unknown matroid kind {other:?}"))),
        }
    }
}

impl fmt::Display for MatroidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatroidSpec::Uniform { r, n } => write!(f, "uniform:{r},{n}"),
            MatroidSpec::Graph(GraphKind::Complete(k)) => write!(f, "graph:K{k}"),
            MatroidSpec::Graph(GraphKind::Wheel(k)) => write!(f, "graph:W{k}"),
            MatroidSpec::Graph(GraphKind::Cycle(k)) => write!(f, "graph:C{k}"),
            MatroidSpec::Projective { rank, q } => write!(f, "pg:{rank},{q}"),
            MatroidSpec::Affine { dim, q } => write!(f, "ag:{dim},{q}"),
            MatroidSpec::Steiner(name) => write!(f, "steiner:{name}"),
            MatroidSpec::File(path) => write!(f, "file:{path}"),
        }
    }
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Instance> {
        let label = self.to_string();
        let (matroid, origin) = match self {
            MatroidSpec::Uniform { r, n } => (uniform(*r, *n)?, Origin::Uniform { r: *r, n: *n }),
            MatroidSpec::Graph(kind) => {
                let g = match *kind {
                    GraphKind::Complete(k) if k >= 1 => complete_graph(k),
                    GraphKind::Wheel(k) if k >= 3 => wheel(k),
                    GraphKind::Cycle(k) if k >= 1 => cycle_graph(k),
                    _ => return Err(Error::Parse(format!("graph parameter too small in {label}"))),
                };
                (graphic(&g)?, Origin::Graphic(*kind))
            }
            MatroidSpec::Projective { rank, q } => (
                projective_geometry(*rank, &FiniteField::new(*q)?)?,
                Origin::Projective { rank: *rank, q: *q },
            ),
            MatroidSpec::Affine { dim, q } => {
                (affine_geometry(*dim, &FiniteField::new(*q)?)?, Origin::Affine { dim: *dim, q: *q })
            }
            MatroidSpec::Steiner(name) => {
                let s = SteinerSystem::builtin(name)?;
                (steiner_matroid(&s)?, Origin::Steiner { t: s.t(), k: s.k(), n: s.n() })
            }
            MatroidSpec::File(path) => {
                let text = std::fs::read_to_string(path)?;
                (MatroidExchange::parse(&text)?, Origin::Generic)
            }
        };
        Ok(Instance { label, matroid, origin })
    }
}

/// A matroid with a display label and its construction.
#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub matroid: Matroid,
    pub origin: Origin,
}

impl Instance {
    pub fn generic(label: impl Into<String>, matroid: Matroid) -> Self {
        Instance { label: label.into(), matroid, origin: Origin::Generic }
    }
}

/// Parses and builds a spec string.
pub fn build(spec: &str) -> Result<Instance> {
    spec.parse::<MatroidSpec>()?.build()
}

/// Specs of the standard test zoo: all loopless, coloopless and not free.
pub const ZOO: &[&str] = &[
    "uniform:2,4",
    "uniform:3,5",
    "graph:K4",
    "graph:W3",
    "pg:3,2",
    "pg:3,3",
    "ag:2,3",
    "steiner:S(3,4,8)",
    "graph:K5",
];

pub fn zoo() -> Result<Vec<Instance>> {
    ZOO.iter().map(|s| build(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_roundtrip() {
        for s in ["uniform:2,4", "graph:K5", "graph:W4", "graph:C6", "pg:3,2", "ag:2,3", "steiner:S(2,3,9)"] {
            assert_eq!(s.parse::<MatroidSpec>().unwrap().to_string(), s);
        }
        assert_eq!("free:3".parse::<MatroidSpec>().unwrap().to_string(), "uniform:3,3");
    }

    #[test]
    fn grammar_rejects() {
        for s in ["uniform", "uniform:2", "uniform:a,b", "graph:X4", "graph:K", "torus:1,2", "pg:3"] {
            assert!(s.parse::<MatroidSpec>().is_err(), "{s}");
        }
        assert!(build("steiner:S(2,3,8)").is_err());
        assert!(build("pg:7,2").is_err());
        assert!(build("graph:W2").is_err());
    }

    #[test]
    fn zoo_shapes() {
        let zoo = zoo().unwrap();
        let shapes: Vec<(usize, usize)> = zoo.iter().map(|i| (i.matroid.n(), i.matroid.rank())).collect();
        assert_eq!(shapes, [(4, 2), (5, 3), (6, 3), (6, 3), (7, 3), (13, 3), (9, 3), (8, 4), (10, 4)]);
        for inst in &zoo {
            let m = &inst.matroid;
            assert!(m.is_loopless() && m.coloops().is_empty() && !m.is_free(), "{}", inst.label);
        }
    }

    #[test]
    fn origins() {
        assert_eq!(build("pg:3,3").unwrap().origin, Origin::Projective { rank: 3, q: 3 });
        assert_eq!(build("steiner:S(3,4,8)").unwrap().origin, Origin::Steiner { t: 3, k: 4, n: 8 });
        let ag = build("ag:2,3").unwrap();
        assert_eq!((ag.matroid.n(), ag.matroid.rank()), (9, 3));
    }
}
