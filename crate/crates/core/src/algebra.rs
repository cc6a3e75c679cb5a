//! Exact arithmetic in `U(gl_n)`.
//!
//! Elements are kept in PBW normal form with respect to a fixed total order on the
//! generators `E_ij`: lowering generators (`i > j`) first, then the Cartan generators
//! (`i == j`), then raising generators (`i < j`); inside each block the order is
//! lexicographic on `(i, j)`. With raising factors rightmost, the Harish-Chandra
//! projection is a filter on normal forms.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{pow, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("generator index E_({row},{col}) out of range for rank {rank}")]
    IndexOutOfRange { row: usize, col: usize, rank: usize },
    #[error("weight has {got} entries, rank is {rank}")]
    WeightLength { got: usize, rank: usize },
}

/// The elementary matrix `E_ij`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub row: usize,
    pub col: usize,
}

impl Generator {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    pub fn is_lowering(&self) -> bool {
        self.row > self.col
    }

    pub fn is_cartan(&self) -> bool {
        self.row == self.col
    }

    pub fn is_raising(&self) -> bool {
        self.row < self.col
    }

    fn block(&self) -> u8 {
        match self.row.cmp(&self.col) {
            Ordering::Greater => 0,
            Ordering::Equal => 1,
            Ordering::Less => 2,
        }
    }

    fn check(&self, rank: usize) -> Result<(), AlgebraError> {
        if self.row == 0 || self.col == 0 || self.row > rank || self.col > rank {
            return Err(AlgebraError::IndexOutOfRange { row: self.row, col: self.col, rank });
        }
        Ok(())
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.block(), self.row, self.col).cmp(&(other.block(), other.row, other.col))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.row < 10 && self.col < 10 {
            write!(f, "E{}{}", self.row, self.col)
        } else {
            write!(f, "E({},{})", self.row, self.col)
        }
    }
}

/// `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj`, as at most two signed generators.
fn bracket(x: Generator, y: Generator) -> [(Generator, i8); 2] {
    let none = (x, 0);
    let first = if x.col == y.row { (Generator::new(x.row, y.col), 1) } else { none };
    let second = if y.col == x.row { (Generator::new(y.row, x.col), -1) } else { none };
    if first.1 != 0 && second.1 != 0 && first.0 == second.0 {
        // E_ii − E_ii
        return [none, none];
    }
    [first, second]
}

/// An ordered product of generator powers; factors strictly increasing, exponents positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial(Vec<(Generator, u32)>);

impl PbwMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// Builds a monomial from `(generator, exponent)` pairs, sorting and merging them.
    /// The result is a PBW monomial, not the product of the factors in the given order.
    pub fn from_factors<I: IntoIterator<Item = (Generator, u32)>>(factors: I) -> Self {
        let mut map: BTreeMap<Generator, u32> = BTreeMap::new();
        for (g, e) in factors {
            if e > 0 {
                *map.entry(g).or_insert(0) += e;
            }
        }
        Self(map.into_iter().collect())
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.0.iter().find(|(h, _)| *h == g).map_or(0, |&(_, e)| e)
    }

    /// `self · g` when `g` is not smaller than the last factor.
    fn push_ordered(&self, g: Generator) -> Self {
        let mut out = self.0.clone();
        match out.last_mut() {
            Some((last, e)) if *last == g => *e += 1,
            _ => out.push((g, 1)),
        }
        Self(out)
    }

    /// Removes one copy of the last factor.
    fn pop_last(&self) -> (Self, Generator) {
        let mut out = self.0.clone();
        let (g, e) = out.pop().expect("pop_last on the unit monomial");
        if e > 1 {
            out.push((g, e - 1));
        }
        (Self(out), g)
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (g, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

type Terms = BTreeMap<PbwMonomial, Rational>;

fn accumulate(terms: &mut Terms, mono: PbwMonomial, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(mono) {
        alloc::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        alloc::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// An element of `U(gl_n)` in PBW normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    rank: usize,
    terms: Terms,
}

impl AlgebraElement {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: Terms::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, Rational::one())
    }

    pub fn scalar(rank: usize, c: Rational) -> Self {
        let mut terms = Terms::new();
        accumulate(&mut terms, PbwMonomial::one(), c);
        Self { rank, terms }
    }

    /// The generator `E_ij`.
    pub fn generator(rank: usize, row: usize, col: usize) -> Result<Self, AlgebraError> {
        let g = Generator::new(row, col);
        g.check(rank)?;
        Ok(Self::monomial(rank, PbwMonomial(vec![(g, 1)]), Rational::one()))
    }

    /// `c · mono`; the monomial is already ordered, so this is a normal form.
    pub fn monomial(rank: usize, mono: PbwMonomial, c: Rational) -> Self {
        let mut terms = Terms::new();
        accumulate(&mut terms, mono, c);
        Self { rank, terms }
    }

    /// The ordered product `g_1 g_2 … g_k` of a word of generators, normalised.
    pub fn word(rank: usize, word: &[(usize, usize)]) -> Result<Self, AlgebraError> {
        let mut rw = Rewriter::new();
        let mut acc = Self::one(rank);
        for &(i, j) in word {
            let g = Self::generator(rank, i, j)?;
            acc = rw.product(&acc, &g)?;
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &PbwMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient of the unit monomial.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&PbwMonomial::one())
    }

    /// `Some(c)` when the element is the scalar `c`.
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&PbwMonomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        Self { rank: self.rank, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        same_rank(self.rank, other.rank)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Self { rank: self.rank, terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        same_rank(self.rank, other.rank)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), -c.clone());
        }
        Ok(Self { rank: self.rank, terms })
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }

    /// Re-normalises the stored terms as a sum of ordered words; a normal form is a fixed point.
    pub fn renormalize(&self) -> Self {
        let mut rw = Rewriter::new();
        let mut out = Self::zero(self.rank);
        for (m, c) in &self.terms {
            let mut acc: Terms = Terms::new();
            accumulate(&mut acc, PbwMonomial::one(), c.clone());
            for &(g, e) in m.factors() {
                for _ in 0..e {
                    acc = rw.terms_times_gen(&acc, g);
                }
            }
            for (mm, cc) in acc {
                accumulate(&mut out.terms, mm, cc);
            }
        }
        out
    }
}

fn same_rank(a: usize, b: usize) -> Result<(), AlgebraError> {
    if a != b {
        return Err(AlgebraError::RankMismatch { left: a, right: b });
    }
    Ok(())
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first reads more naturally
        let mut items: Vec<(&PbwMonomial, &Rational)> = self.terms.iter().collect();
        items.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        for (k, (m, c)) in items.into_iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

// Operator impls panic on rank mismatch; the `try_*` and `normal_product` forms report it.
impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        self.try_add(rhs).expect("rank mismatch in addition")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self.try_sub(rhs).expect("rank mismatch in subtraction")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        normal_product(self, rhs).expect("rank mismatch in product")
    }
}

/// Normal-ordering engine with a memo of `monomial × generator` products.
///
/// The memo only caches values of a pure function, so a single rewriter may be reused
/// across any number of products of any rank.
#[derive(Default)]
pub struct Rewriter {
    memo: BTreeMap<(PbwMonomial, Generator), Terms>,
}

impl Rewriter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of cached `monomial × generator` products.
    pub fn cached(&self) -> usize {
        self.memo.len()
    }

    fn mono_times_gen(&mut self, mono: &PbwMonomial, g: Generator) -> Terms {
        match mono.0.last() {
            Some(&(x, _)) if x > g => {}
            _ => {
                let mut t = Terms::new();
                t.insert(mono.push_ordered(g), Rational::one());
                return t;
            }
        }
        let key = (mono.clone(), g);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        // mono = prefix·x with x > g:  prefix·x·g = (prefix·g)·x + prefix·[x, g]
        let (prefix, x) = mono.pop_last();
        let mut out = Terms::new();
        let pg = self.mono_times_gen(&prefix, g);
        for (t, c) in pg {
            for (t2, c2) in self.mono_times_gen(&t, x) {
                accumulate(&mut out, t2, &c * &c2);
            }
        }
        for (h, s) in bracket(x, g) {
            if s == 0 {
                continue;
            }
            let s = Rational::from_integer(s.into());
            for (t2, c2) in self.mono_times_gen(&prefix, h) {
                accumulate(&mut out, t2, &c2 * &s);
            }
        }
        self.memo.insert(key, out.clone());
        out
    }

    fn terms_times_gen(&mut self, terms: &Terms, g: Generator) -> Terms {
        let mut out = Terms::new();
        for (m, c) in terms {
            for (m2, c2) in self.mono_times_gen(m, g) {
                accumulate(&mut out, m2, c * &c2);
            }
        }
        out
    }

    fn mono_times_mono(&mut self, left: &PbwMonomial, right: &PbwMonomial) -> Terms {
        let mut acc = Terms::new();
        acc.insert(left.clone(), Rational::one());
        for &(g, e) in right.factors() {
            for _ in 0..e {
                acc = self.terms_times_gen(&acc, g);
            }
        }
        acc
    }

    /// PBW normal form of `a · b`.
    pub fn product(&mut self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        same_rank(a.rank, b.rank)?;
        let mut out = AlgebraElement::zero(a.rank);
        for (mb, cb) in &b.terms {
            for (ma, ca) in &a.terms {
                let coeff = ca * cb;
                if mb.is_one() {
                    accumulate(&mut out.terms, ma.clone(), coeff);
                    continue;
                }
                for (m, c) in self.mono_times_mono(ma, mb) {
                    accumulate(&mut out.terms, m, c * &coeff);
                }
            }
        }
        Ok(out)
    }

    /// `ab − ba`.
    pub fn commutator(&mut self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let ab = self.product(a, b)?;
        let ba = self.product(b, a)?;
        ab.try_sub(&ba)
    }
}

/// PBW normal form of `a · b`.
pub fn normal_product(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    Rewriter::new().product(a, b)
}

pub fn commutator(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    Rewriter::new().commutator(a, b)
}

/// A commutative polynomial in `h_1, …, h_n` (exponent vectors of length `n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanPolynomial {
    rank: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl CartanPolynomial {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c · h^exponents`.
    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rational) {
        debug_assert_eq!(exponents.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn evaluate(&self, weight: &[Rational]) -> Result<Rational, AlgebraError> {
        if weight.len() != self.rank {
            return Err(AlgebraError::WeightLength { got: weight.len(), rank: self.rank });
        }
        let mut total = Rational::zero();
        for (exps, c) in &self.terms {
            let mut t = c.clone();
            for (w, &e) in weight.iter().zip(exps) {
                t *= pow(w, e);
            }
            total += t;
        }
        Ok(total)
    }
}

impl fmt::Display for CartanPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (exps, c) in &self.terms {
            let mut s = alloc::format!("{c}");
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => s.push_str(&alloc::format!("*h{}", i + 1)),
                    _ => s.push_str(&alloc::format!("*h{}^{}", i + 1, e)),
                }
            }
            parts.push(s);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Keeps only the pure-Cartan monomials of a normal form, with `E_kk ↦ h_k`.
///
/// For an element of weight zero this is the eigenvalue polynomial on highest-weight vectors.
pub fn harish_chandra_project(a: &AlgebraElement) -> CartanPolynomial {
    let mut out = CartanPolynomial::zero(a.rank);
    for (m, c) in &a.terms {
        if m.factors().iter().all(|(g, _)| g.is_cartan()) {
            let mut exps = vec![0u32; a.rank];
            for &(g, e) in m.factors() {
                exps[g.row - 1] = e;
            }
            out.add_term(exps, c.clone());
        }
    }
    out
}

/// Eigenvalue of `a` on a highest-weight vector of weight `weight`, read off the projection.
pub fn hw_eigenvalue(a: &AlgebraElement, weight: &[Rational]) -> Result<Rational, AlgebraError> {
    harish_chandra_project(a).evaluate(weight)
}
