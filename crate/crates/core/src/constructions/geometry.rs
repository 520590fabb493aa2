use std::sync::Arc;

use super::field::FiniteField;
use crate::elemset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankOracle};

/// Column matroid of a matrix over a finite field.
#[derive(Debug, Clone)]
pub struct LinearOracle {
    field: FiniteField,
    columns: Vec<Vec<u8>>,
}

impl RankOracle for LinearOracle {
    fn rank(&self, set: ElemSet) -> usize {
        self.field.rank(set.iter().map(|e| &self.columns[e]))
    }
}

/// Matroid whose elements are the given column vectors.
pub fn linear_matroid(field: &FiniteField, columns: Vec<Vec<u8>>) -> Result<Matroid> {
    let q = field.order();
    if let Some(bad) = columns.iter().flatten().find(|&&x| x as u32 >= q) {
        return Err(Error::Parse(format!("matrix entry {bad} outside GF({q})")));
    }
    if let Some(len) = columns.first().map(Vec::len) {
        if columns.iter().any(|c| c.len() != len) {
            return Err(Error::Parse("matrix columns have different lengths".into()));
        }
    }
    let n = columns.len();
    Matroid::from_oracle(n, Arc::new(LinearOracle { field: field.clone(), columns }))
}

/// Number of points of `PG(r-1, q)`.
pub fn projective_point_count(r: u32, q: u32) -> u64 {
    (0..r).map(|i| (q as u64).pow(i)).sum()
}

/// Canonical representatives of the points of `PG(r-1, q)`: first nonzero
/// coordinate equal to 1, listed in lexicographic order of coordinates.
pub fn projective_points(r: usize, field: &FiniteField) -> Result<Vec<Vec<u8>>> {
    let q = field.order();
    let count = projective_point_count(r as u32, q);
    if count > MAX_ELEMENTS as u64 {
        return Err(Error::GroundSetTooLarge(count as usize));
    }
    let mut points = Vec::with_capacity(count as usize);
    for lead in 0..r {
        let free = r - lead - 1;
        for idx in 0..(q as u64).pow(free as u32) {
            let mut v = vec![0u8; r];
            v[lead] = 1;
            let mut x = idx;
            for slot in (lead + 1..r).rev() {
                v[slot] = (x % q as u64) as u8;
                x /= q as u64;
            }
            points.push(v);
        }
    }
    points.sort();
    Ok(points)
}

/// `PG(r-1, q)`, the rank-`r` projective geometry over `GF(q)`.
pub fn projective_geometry(r: usize, field: &FiniteField) -> Result<Matroid> {
    linear_matroid(field, projective_points(r, field)?)
}

/// `AG(d, q)` as a rank-`(d+1)` matroid; point `x` is the vector `(1, x)` and
/// points are listed in lexicographic order of `x`.
pub fn affine_geometry(d: usize, field: &FiniteField) -> Result<Matroid> {
    let q = field.order() as u64;
    let count = q.pow(d as u32);
    if count > MAX_ELEMENTS as u64 {
        return Err(Error::GroundSetTooLarge(count as usize));
    }
    let columns = (0..count)
        .map(|idx| {
            let mut v = vec![0u8; d + 1];
            v[0] = 1;
            let mut x = idx;
            for slot in (1..=d).rev() {
                v[slot] = (x % q) as u8;
                x /= q;
            }
            v
        })
        .collect();
    linear_matroid(field, columns)
}
