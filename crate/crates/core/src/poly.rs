//! Polynomials in central variables `u`, `v` over `U(gl_n)`, and plain rational polynomials.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, AlgebraError, Rewriter};
use crate::rational::{int, pow, Rational};

/// Binomial coefficients C(d, j) for j = 0..=d.
fn binomials(d: usize) -> Vec<Rational> {
    let mut row = vec![Rational::one()];
    for k in 1..=d {
        let prev = row[k - 1].clone();
        row.push(prev * int((d - k + 1) as i64) / int(k as i64));
    }
    row
}

/// `Σ_d coeffs[d] · u^d` with algebra coefficients; `u` is central.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPolynomial {
    rank: usize,
    coeffs: Vec<AlgebraElement>,
}

impl UPolynomial {
    pub fn zero(rank: usize) -> Self {
        Self { rank, coeffs: Vec::new() }
    }

    pub fn constant(c: AlgebraElement) -> Self {
        let rank = c.rank();
        Self::from_coefficients(rank, vec![c])
    }

    /// The variable `u` itself.
    pub fn variable(rank: usize) -> Self {
        Self::from_coefficients(rank, vec![AlgebraElement::zero(rank), AlgebraElement::one(rank)])
    }

    /// `u + c` for a scalar `c`.
    pub fn linear(rank: usize, c: Rational) -> Self {
        Self::from_coefficients(rank, vec![AlgebraElement::scalar(rank, c), AlgebraElement::one(rank)])
    }

    pub fn from_coefficients(rank: usize, coeffs: Vec<AlgebraElement>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.rank() == rank));
        let mut p = Self { rank, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(AlgebraElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[AlgebraElement] {
        &self.coeffs
    }

    pub fn coefficient(&self, d: usize) -> AlgebraElement {
        self.coeffs.get(d).cloned().unwrap_or_else(|| AlgebraElement::zero(self.rank))
    }

    pub fn leading_coefficient(&self) -> Option<&AlgebraElement> {
        self.coeffs.last()
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.rank != other.rank {
            return Err(AlgebraError::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|d| self.coefficient(d).try_add(&other.coefficient(d))).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coefficients(self.rank, coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coefficients(self.rank, self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    /// Product with a shared rewriter; coefficient products keep their left/right order.
    pub fn multiply_with(&self, other: &Self, rw: &mut Rewriter) -> Result<Self, AlgebraError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.rank));
        }
        let mut coeffs = vec![AlgebraElement::zero(self.rank); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = rw.product(a, b)?;
                coeffs[i + j] = coeffs[i + j].try_add(&ab)?;
            }
        }
        Ok(Self::from_coefficients(self.rank, coeffs))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.multiply_with(other, &mut Rewriter::new())
    }

    /// Substitutes the scalar `point` for `u`.
    pub fn evaluate_at(&self, point: &Rational) -> AlgebraElement {
        // Horner
        let mut acc = AlgebraElement::zero(self.rank);
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(point) + c;
        }
        acc
    }

    /// `p(u − k)`.
    pub fn shift_variable(&self, k: i64) -> Self {
        self.shift_by(&int(k))
    }

    /// `p(u − k)` for a rational `k`.
    pub fn shift_by(&self, k: &Rational) -> Self {
        let mut coeffs = vec![AlgebraElement::zero(self.rank); self.coeffs.len()];
        let minus_k = -k.clone();
        for (d, c) in self.coeffs.iter().enumerate() {
            // (u − k)^d = Σ_j C(d, j) u^j (−k)^(d−j)
            for (j, b) in binomials(d).into_iter().enumerate() {
                let s = b * pow(&minus_k, (d - j) as u32);
                coeffs[j] = &coeffs[j] + &c.scale(&s);
            }
        }
        Self::from_coefficients(self.rank, coeffs)
    }
}

impl fmt::Display for UPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{d}")?,
            }
        }
        Ok(())
    }
}

/// `Σ c_{ij} u^i v^j` with algebra coefficients; `u` and `v` are central and commute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPolynomial {
    rank: usize,
    coeffs: BTreeMap<(usize, usize), AlgebraElement>,
}

impl BiPolynomial {
    pub fn zero(rank: usize) -> Self {
        Self { rank, coeffs: BTreeMap::new() }
    }

    /// `p(u)` viewed in two variables.
    pub fn in_u(p: &UPolynomial) -> Self {
        let mut out = Self::zero(p.rank());
        for (d, c) in p.coefficients().iter().enumerate() {
            out.add_term((d, 0), c.clone());
        }
        out
    }

    /// `p(v)`.
    pub fn in_v(p: &UPolynomial) -> Self {
        let mut out = Self::zero(p.rank());
        for (d, c) in p.coefficients().iter().enumerate() {
            out.add_term((0, d), c.clone());
        }
        out
    }

    fn add_term(&mut self, key: (usize, usize), c: AlgebraElement) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(key).or_insert_with(|| AlgebraElement::zero(c.rank()));
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &AlgebraElement)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, du: usize, dv: usize) -> AlgebraElement {
        self.coeffs.get(&(du, dv)).cloned().unwrap_or_else(|| AlgebraElement::zero(self.rank))
    }

    /// Total number of PBW terms over all coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.values().map(AlgebraElement::len).sum()
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.rank != other.rank {
            return Err(AlgebraError::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.rank);
        for (k, x) in &self.coeffs {
            out.add_term(*k, x.scale(c));
        }
        out
    }

    pub fn multiply_with(&self, other: &Self, rw: &mut Rewriter) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut out = Self::zero(self.rank);
        for (&(a1, b1), x) in &self.coeffs {
            for (&(a2, b2), y) in &other.coeffs {
                out.add_term((a1 + a2, b1 + b2), rw.product(x, y)?);
            }
        }
        Ok(out)
    }

    /// `(u − v) · self`.
    pub fn times_u_minus_v(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for (&(a, b), x) in &self.coeffs {
            out.add_term((a + 1, b), x.clone());
            out.add_term((a, b + 1), x.scale(&-Rational::one()));
        }
        out
    }

    /// Substitutes scalars for both variables.
    pub fn evaluate_at(&self, u: &Rational, v: &Rational) -> AlgebraElement {
        let mut acc = AlgebraElement::zero(self.rank);
        for (&(a, b), x) in &self.coeffs {
            acc = &acc + &x.scale(&(pow(u, a as u32) * pow(v, b as u32)));
        }
        acc
    }
}

/// A univariate polynomial with rational coefficients (index = power of `u`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn from_coefficients(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn one() -> Self {
        Self::from_coefficients(vec![Rational::one()])
    }

    /// `u + c`.
    pub fn linear(c: Rational) -> Self {
        Self::from_coefficients(vec![c, Rational::one()])
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn multiply(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coefficients(out)
    }

    pub fn evaluate(&self, point: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point + c;
        }
        acc
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{d}")?,
            }
        }
        Ok(())
    }
}
