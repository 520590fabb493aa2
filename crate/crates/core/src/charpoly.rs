//! Characteristic polynomials, critical exponents and the 2-sum identity
//! `χ(M1 ⊕₂ M2) = χ(M1)χ(M2)/(λ-1) + χ(M1/z)χ(M2/z)`.
//!
//! `χ` is computed two independent ways: the subset expansion
//! `Σ_{A ⊆ E} (-1)^|A| λ^(r - rk A)` and a memoized deletion–contraction
//! recursion. [`characteristic_polynomial`] runs both and insists they agree.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Largest ground set for the `2^n` subset expansion.
pub const WHITNEY_MAX_N: usize = 24;

/// Call budget for deletion–contraction.
pub const DC_NODE_CAP: u64 = 50_000_000;

/// Integer polynomial in `λ`, coefficient `i` multiplies `λ^i`.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `λ - c`.
    pub fn linear_root(c: i64) -> Self {
        Self::from_i64(&[-c, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Quotient and remainder of division by `λ - 1`.
    pub fn div_by_lambda_minus_one(&self) -> (Polynomial, BigInt) {
        if self.coeffs.is_empty() {
            return (Polynomial::zero(), BigInt::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quot = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            carry += &self.coeffs[i];
            if i > 0 {
                quot[i - 1] = carry.clone();
            }
        }
        (Polynomial::from_coeffs(quot), carry)
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                self.coeffs.get(i).cloned().unwrap_or_default()
                    + rhs.coeffs.get(i).cloned().unwrap_or_default()
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                self.coeffs.get(i).cloned().unwrap_or_default()
                    - rhs.coeffs.get(i).cloned().unwrap_or_default()
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Subset expansion; `2^n` rank evaluations.
pub fn whitney_sum(m: &Matroid) -> Result<Polynomial> {
    let n = m.n();
    if n > WHITNEY_MAX_N {
        return Err(Error::ResourceCap(format!("subset expansion needs n <= {WHITNEY_MAX_N}, got {n}")));
    }
    let r = m.rank();
    let mut acc = vec![0i64; r + 1];
    for bits in 0u64..(1u64 << n) {
        let a = ElemSet::from_bits(bits);
        let sign = if a.len().is_multiple_of(2) { 1 } else { -1 };
        acc[r - m.rank_of(a)] += sign;
    }
    Ok(Polynomial::from_i64(&acc))
}

/// Deletion–contraction over the elements in index order.
///
/// A state is `(i, F)`: elements below `i` are gone and `F` is the closure of
/// those contracted. The minor on `{i..n-1}` depends only on that pair, which
/// makes it a sound memo key.
pub fn deletion_contraction(m: &Matroid) -> Result<Polynomial> {
    struct Dc<'a> {
        m: &'a Matroid,
        memo: HashMap<(usize, ElemSet), Polynomial>,
        calls: u64,
        lambda_minus_one: Polynomial,
    }

    impl Dc<'_> {
        fn go(&mut self, i: usize, flat: ElemSet) -> Result<Polynomial> {
            let n = self.m.n();
            let rest = ElemSet::full(n) - ElemSet::full(i);
            if !(flat & rest).is_empty() {
                return Ok(Polynomial::zero());
            }
            if i == n {
                return Ok(Polynomial::one());
            }
            if let Some(p) = self.memo.get(&(i, flat)) {
                return Ok(p.clone());
            }
            self.calls += 1;
            if self.calls > DC_NODE_CAP {
                return Err(Error::ResourceCap(format!("deletion–contraction exceeded {DC_NODE_CAP} calls")));
            }
            let contracted = self.m.closure(flat.with(i));
            let coloop = self.m.rank_of(rest | flat) > self.m.rank_of(rest.without(i) | flat);
            let out = if coloop {
                let c = self.go(i + 1, contracted)?;
                &self.lambda_minus_one * &c
            } else {
                let d = self.go(i + 1, flat)?;
                let c = self.go(i + 1, contracted)?;
                &d - &c
            };
            self.memo.insert((i, flat), out.clone());
            Ok(out)
        }
    }

    let mut dc = Dc { m, memo: HashMap::new(), calls: 0, lambda_minus_one: Polynomial::linear_root(1) };
    let start = m.closure(ElemSet::EMPTY);
    dc.go(0, start)
}

/// `χ(M; λ)`, cross-checked between both methods when `n` allows; cached on the matroid.
pub fn characteristic_polynomial(m: &Matroid) -> Result<Polynomial> {
    if let Some(p) = m.charpoly_cache().get() {
        return Ok(p.clone());
    }
    let dc = deletion_contraction(m)?;
    if m.n() <= WHITNEY_MAX_N {
        let ws = whitney_sum(m)?;
        if ws != dc {
            return Err(Error::Internal(format!(
                "subset expansion {ws} disagrees with deletion–contraction {dc}"
            )));
        }
    }
    Ok(m.charpoly_cache().get_or_init(|| dc).clone())
}

/// Least `c >= 0` with `χ(M; q^c) > 0`; infinite when `M` has a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CriticalExponent {
    Finite(u32),
    Infinite,
}

impl fmt::Display for CriticalExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalExponent::Finite(c) => write!(f, "{c}"),
            CriticalExponent::Infinite => write!(f, "inf"),
        }
    }
}

pub fn critical_exponent(m: &Matroid, q: u64) -> Result<CriticalExponent> {
    if q < 2 {
        return Err(Error::Precondition(format!("q must be at least 2, got {q}")));
    }
    if !m.is_loopless() {
        return Ok(CriticalExponent::Infinite);
    }
    let chi = characteristic_polynomial(m)?;
    let limit = m.rank() as u32 + 2;
    for c in 0..=limit {
        let value = chi.eval(&BigInt::from(q).pow(c));
        if value.is_positive() {
            return Ok(CriticalExponent::Finite(c));
        }
    }
    Err(Error::ResourceCap(format!("no critical exponent up to r+2 = {limit} at q = {q}")))
}

/// Right-hand side of the 2-sum identity.
pub fn two_sum_char_poly(m1: &Matroid, z1: usize, m2: &Matroid, z2: usize) -> Result<Polynomial> {
    // validates the basepoints the same way the 2-sum itself does
    for (m, z) in [(m1, z1), (m2, z2)] {
        if z >= m.n() || m.is_loop(z) || m.is_coloop(z) {
            return Err(Error::InvalidBasepoint(format!("element {z} cannot be a basepoint")));
        }
    }
    let product = &characteristic_polynomial(m1)? * &characteristic_polynomial(m2)?;
    let (quot, rem) = product.div_by_lambda_minus_one();
    if !rem.is_zero() {
        return Err(Error::Internal(format!("χ(M1)χ(M2) = {product} is not divisible by λ-1")));
    }
    let c1 = m1.contract(ElemSet::singleton(z1))?.matroid;
    let c2 = m2.contract(ElemSet::singleton(z2))?.matroid;
    let tail = &characteristic_polynomial(&c1)? * &characteristic_polynomial(&c2)?;
    Ok(&quot + &tail)
}

/// The four critical exponents around `M ⊕₂ M` and the two claims relating them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoSumLemmaReport {
    pub basepoint: usize,
    pub q: u64,
    pub c_matroid: CriticalExponent,
    pub c_contraction: CriticalExponent,
    pub c_deletion: CriticalExponent,
    pub c_two_sum: CriticalExponent,
    /// `χ(M ⊕₂ M)` computed directly equals the identity's right-hand side.
    pub identity_holds: bool,
    /// `c(M ⊕₂ M) = c(M \ z)`. Holds on every `GF(q)`-representable sample
    /// tried; `U_{2,4}` at `q = 2` is a non-binary counterexample.
    pub lemma_holds: bool,
    /// `c(M ⊕₂ M) = max(c(M), c(M / z))`.
    pub max_formula_holds: bool,
}

/// Computes both sides of `c(M ⊕₂ M) = c(M \ z)` and of the max formula.
/// Neither is assumed; callers decide which failures matter.
pub fn critical_exponent_two_sum_lemma(m: &Matroid, z: usize, q: u64) -> Result<TwoSumLemmaReport> {
    if !m.is_loopless() {
        return Err(Error::Precondition("matroid has a loop".into()));
    }
    let glued = m.two_sum(z, m, z)?;
    let direct = characteristic_polynomial(&glued)?;
    let identity = two_sum_char_poly(m, z, m, z)?;
    let contraction = m.contract(ElemSet::singleton(z))?.matroid;
    let deletion = m.delete(ElemSet::singleton(z))?.matroid;
    let c_matroid = critical_exponent(m, q)?;
    let c_contraction = critical_exponent(&contraction, q)?;
    let c_deletion = critical_exponent(&deletion, q)?;
    let c_two_sum = critical_exponent(&glued, q)?;
    Ok(TwoSumLemmaReport {
        basepoint: z,
        q,
        c_matroid,
        c_contraction,
        c_deletion,
        c_two_sum,
        identity_holds: direct == identity,
        lemma_holds: c_two_sum == c_deletion,
        max_formula_holds: c_two_sum == c_matroid.max(c_contraction),
    })
}
