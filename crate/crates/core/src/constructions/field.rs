use std::fmt;

use crate::error::{Error, Result};

/// Monic irreducible polynomials, coefficients low degree first.
const IRREDUCIBLES: &[(u32, &[u32])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (16, &[1, 1, 0, 0, 1]),
    (32, &[1, 0, 1, 0, 0, 1]),
    (9, &[1, 0, 1]),
    (27, &[1, 2, 0, 1]),
    (25, &[2, 0, 1]),
];

/// `GF(q)` for prime powers `q <= 32`, backed by full operation tables.
///
/// Elements are `0..q`; for `q = p^k` an element's base-`p` digits are the
/// coefficients of its polynomial representative, constant term first.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    q: u32,
    p: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    generator: u8,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        if q > 32 {
            return Err(Error::UnsupportedField(q));
        }
        let (p, k) = prime_power(q).ok_or(Error::UnsupportedField(q))?;
        let qs = q as usize;
        let digits = |mut x: u32| -> Vec<u32> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let undigits = |ds: &[u32]| -> u32 { ds.iter().rev().fold(0, |acc, &d| acc * p + d) };

        let modulus: Vec<u32> = if k == 1 {
            vec![0, 1]
        } else {
            IRREDUCIBLES
                .iter()
                .find(|(order, _)| *order == q)
                .map(|(_, poly)| poly.to_vec())
                .ok_or(Error::UnsupportedField(q))?
        };

        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum) as u8;
                let prod = if k == 1 {
                    a * b % p
                } else {
                    let mut acc = vec![0u32; 2 * k as usize - 1];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            acc[i + j] = (acc[i + j] + x * y) % p;
                        }
                    }
                    // reduce by the monic modulus from the top down
                    for deg in (k as usize..acc.len()).rev() {
                        let c = acc[deg];
                        if c == 0 {
                            continue;
                        }
                        for (i, m) in modulus.iter().enumerate() {
                            let idx = deg - k as usize + i;
                            acc[idx] = (acc[idx] + p * p - c * m % p) % p;
                        }
                    }
                    undigits(&acc[..k as usize])
                };
                mul[(a * q + b) as usize] = prod as u8;
            }
        }

        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..qs {
            neg[a] = (0..qs)
                .find(|&b| add[a * qs + b] == 0)
                .ok_or_else(|| Error::Internal(format!("GF({q}): {a} has no additive inverse")))?
                as u8;
            if a > 0 {
                inv[a] = (1..qs)
                    .find(|&b| mul[a * qs + b] == 1)
                    .ok_or_else(|| Error::Internal(format!("GF({q}): {a} has no multiplicative inverse")))?
                    as u8;
            }
        }

        let order = |g: usize| -> usize {
            let mut x = g;
            let mut o = 1;
            while x != 1 {
                x = mul[x * qs + g] as usize;
                o += 1;
            }
            o
        };
        let generator = (1..qs)
            .find(|&g| order(g) == qs - 1)
            .ok_or_else(|| Error::Internal(format!("GF({q}) has no primitive element")))?
            as u8;

        let field = FiniteField { q, p, add, mul, neg, inv, generator };
        field.check_axioms()?;
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn generator(&self) -> u8 {
        self.generator
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is reported as 0.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    /// Exhaustive check of the field axioms on the tables.
    pub fn check_axioms(&self) -> Result<()> {
        let q = self.q as u8;
        let fail = |what: &str| Err(Error::Internal(format!("GF({}) violates {what}", self.q)));
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return fail("identities");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                }
            }
        }
        Ok(())
    }

    /// Rank of a list of vectors over this field.
    pub fn rank(&self, vectors: impl IntoIterator<Item = impl AsRef<[u8]>>) -> usize {
        let mut basis: Vec<(usize, Vec<u8>)> = Vec::new();
        for v in vectors {
            let mut v = v.as_ref().to_vec();
            for (pivot, row) in &basis {
                let c = v[*pivot];
                if c != 0 {
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = self.sub(*x, self.mul(c, y));
                    }
                }
            }
            if let Some(pivot) = v.iter().position(|&x| x != 0) {
                let s = self.inv(v[pivot]);
                for x in v.iter_mut() {
                    *x = self.mul(*x, s);
                }
                basis.push((pivot, v));
            }
        }
        basis.len()
    }
}
