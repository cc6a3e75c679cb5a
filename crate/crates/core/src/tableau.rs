//! Gelfand-Tsetlin tableaux with rational entries.
//!
//! Row `m` (1-based) holds `m` entries `l_m1 … l_mm`; row `n` is the top row. The
//! lattice `L_Z` of a tableau consists of all integer shifts of rows `1..n-1` with
//! row `n` fixed.

use alloc::vec::Vec;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::RationalPolynomial;
use crate::rational::{pow, sign, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("a tableau needs at least one row")]
    Empty,
    #[error("row {row} has {got} entries, expected {row}")]
    RowLength { row: usize, got: usize },
    #[error("row index {row} out of range for rank {rank}")]
    RowOutOfRange { row: usize, rank: usize },
    #[error("position ({row},{pos}) out of range")]
    PositionOutOfRange { row: usize, pos: usize },
    #[error("row {row} has the repeated entry {value}")]
    RepeatedEntry { row: usize, value: Rational },
    #[error("the top row {row} never shifts")]
    TopRowShift { row: usize },
    #[error("tableaux have different ranks {left} and {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("tableau is not in the integer lattice of the reference tableau")]
    NotInLattice,
    #[error("tableau is critical (row {row} has equal entries)")]
    Critical { row: usize },
}

/// A point of `T_n(Q)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Vec<Rational>>,
}

/// Generic, singular or critical, with every integer-difference pair of the inner rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: ClassKind,
    /// `(m, i, j)` with `2 ≤ m ≤ n-1`, `i < j` and `l_mi − l_mj ∈ Z`.
    pub singular_pairs: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    Generic,
    Singular(usize),
    Critical,
}

impl ClassKind {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Generic => "generic",
            Self::Singular(_) => "singular",
            Self::Critical => "critical",
        }
    }
}

impl Classification {
    pub fn is_one_singular(&self) -> bool {
        self.kind == ClassKind::Singular(1)
    }
}

/// Canonical form of the maximal ideal `m_L`: each row sorted increasingly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GtIdeal {
    rows: Vec<Vec<Rational>>,
}

impl GtIdeal {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// The sorted representative as a tableau.
    pub fn to_tableau(&self) -> Tableau {
        Tableau { rows: self.rows.clone() }
    }
}

/// Positions `(m, i)` of rows `1..n-1`, in row-major order; the coordinates of `L_Z`.
pub fn free_positions(rank: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 1..rank {
        for i in 1..=m {
            out.push((m, i));
        }
    }
    out
}

impl Tableau {
    /// Rows listed bottom-up: `rows[0]` is row 1 (one entry), `rows[n-1]` is the top row.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self, TableauError> {
        if rows.is_empty() {
            return Err(TableauError::Empty);
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != k + 1 {
                return Err(TableauError::RowLength { row: k + 1, got: row.len() });
            }
        }
        Ok(Self { rows })
    }

    /// The tableau of a highest-weight vector: `l_mi = λ_i − i + 1` in every row.
    pub fn from_weight(weight: &[Rational]) -> Result<Self, TableauError> {
        if weight.is_empty() {
            return Err(TableauError::Empty);
        }
        let shifted: Vec<Rational> =
            weight.iter().enumerate().map(|(i, l)| l - Rational::from_integer((i as i64).into())).collect();
        Self::new((1..=weight.len()).map(|m| shifted[..m].to_vec()).collect())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, m: usize) -> &[Rational] {
        &self.rows[m - 1]
    }

    pub fn entry(&self, m: usize, i: usize) -> &Rational {
        &self.rows[m - 1][i - 1]
    }

    fn check_row(&self, m: usize) -> Result<(), TableauError> {
        if m == 0 || m > self.rank() {
            return Err(TableauError::RowOutOfRange { row: m, rank: self.rank() });
        }
        Ok(())
    }

    /// First row (from the bottom) holding two equal entries.
    pub fn critical_row(&self) -> Option<usize> {
        (1..=self.rank()).find(|&m| {
            let row = self.row(m);
            (0..row.len()).any(|i| row[i + 1..].contains(&row[i]))
        })
    }

    pub fn is_critical(&self) -> bool {
        self.critical_row().is_some()
    }

    pub fn classify(&self) -> Classification {
        let n = self.rank();
        let mut pairs = Vec::new();
        for m in 2..n {
            let row = self.row(m);
            for i in 0..m {
                for j in i + 1..m {
                    if (&row[i] - &row[j]).is_integer() {
                        pairs.push((m, i + 1, j + 1));
                    }
                }
            }
        }
        let kind = if self.is_critical() {
            ClassKind::Critical
        } else if pairs.is_empty() {
            ClassKind::Generic
        } else {
            ClassKind::Singular(pairs.len())
        };
        Classification { kind, singular_pairs: pairs }
    }

    /// `γ_mk(L) = Σ_i (l_mi + m − 1)^k Π_{j≠i} (1 − 1/(l_mi − l_mj))`.
    pub fn gamma_value(&self, m: usize, k: u32) -> Result<Rational, TableauError> {
        self.check_row(m)?;
        let row = self.row(m);
        let offset = Rational::from_integer(((m - 1) as i64).into());
        let mut total = Rational::zero();
        for (i, li) in row.iter().enumerate() {
            let mut term = pow(&(li + &offset), k);
            for (j, lj) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                let diff = li - lj;
                if diff.is_zero() {
                    return Err(TableauError::RepeatedEntry { row: m, value: li.clone() });
                }
                term *= Rational::one() - diff.recip();
            }
            total += term;
        }
        Ok(total)
    }

    /// `α_m(u) = Π_i (u + l_mi)`, the scalar by which `a_m(u)` acts on the weight space;
    /// `α_0 = 1`.
    pub fn alpha_polynomial(&self, m: usize) -> Result<RationalPolynomial, TableauError> {
        if m == 0 {
            return Ok(RationalPolynomial::one());
        }
        self.check_row(m)?;
        Ok(self.row(m).iter().fold(RationalPolynomial::one(), |acc, l| acc.multiply(&RationalPolynomial::linear(l.clone()))))
    }

    /// `α_m(x)` without building the polynomial; `m = 0` gives 1.
    pub fn alpha_value(&self, m: usize, x: &Rational) -> Rational {
        if m == 0 {
            return Rational::one();
        }
        self.row(m).iter().fold(Rational::one(), |acc, l| acc * (x + l))
    }

    pub fn canonical_ideal(&self) -> GtIdeal {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.sort();
                r
            })
            .collect();
        GtIdeal { rows }
    }

    /// `L ± δ_mi`; the top row cannot move.
    pub fn lattice_shift(&self, m: usize, i: usize, dir: i64) -> Result<Self, TableauError> {
        self.check_row(m)?;
        if m == self.rank() {
            return Err(TableauError::TopRowShift { row: m });
        }
        if i == 0 || i > m {
            return Err(TableauError::PositionOutOfRange { row: m, pos: i });
        }
        let mut out = self.clone();
        out.rows[m - 1][i - 1] += Rational::from_integer(dir.into());
        Ok(out)
    }

    /// Adds an integer vector indexed like [`free_positions`].
    pub fn shifted(&self, shift: &[i64]) -> Self {
        let positions = free_positions(self.rank());
        assert_eq!(shift.len(), positions.len(), "shift vector length");
        let mut out = self.clone();
        for (&(m, i), &s) in positions.iter().zip(shift) {
            if s != 0 {
                out.rows[m - 1][i - 1] += Rational::from_integer(s.into());
            }
        }
        out
    }

    /// `other − self` as an integer vector over [`free_positions`], when `other ∈ L_Z`.
    pub fn lattice_offset(&self, other: &Self) -> Option<Vec<i64>> {
        let n = self.rank();
        if other.rank() != n || self.row(n) != other.row(n) {
            return None;
        }
        let mut out = Vec::new();
        for (m, i) in free_positions(n) {
            let d = other.entry(m, i) - self.entry(m, i);
            if !d.is_integer() {
                return None;
            }
            out.push(i64::try_from(d.to_integer()).ok()?);
        }
        Some(out)
    }

    /// Whether `other` lies in the same non-critical component of `L_Z` as `self`: every
    /// integer-difference pair in a row keeps its (nonzero) sign.
    pub fn same_nc_component(&self, other: &Self) -> Result<bool, TableauError> {
        if self.lattice_offset(other).is_none() {
            return Err(TableauError::NotInLattice);
        }
        if let Some(row) = self.critical_row().or_else(|| other.critical_row()) {
            return Err(TableauError::Critical { row });
        }
        for m in 2..self.rank() {
            let (a, b) = (self.row(m), other.row(m));
            for i in 0..m {
                for j in i + 1..m {
                    let d = &a[i] - &a[j];
                    if d.is_integer() && sign(&d) != sign(&(&b[i] - &b[j])) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Whether some row-wise permutation of `other` differs from `self` by integers in
    /// rows `1..n-1` and agrees exactly in row `n`.
    pub fn module_orbit_equivalent(&self, other: &Self) -> Result<bool, TableauError> {
        let n = self.rank();
        if other.rank() != n {
            return Err(TableauError::RankMismatch { left: n, right: other.rank() });
        }
        if self.canonical_ideal().rows[n - 1] != other.canonical_ideal().rows[n - 1] {
            return Ok(false);
        }
        // rows below the top match iff their multisets of residues mod Z agree
        for m in 1..n {
            if residues(self.row(m)) != residues(other.row(m)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Sorted fractional parts `x − floor(x)`.
fn residues(row: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = row.iter().map(|x| x - x.floor()).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use alloc::vec;
    use proptest::prelude::*;

    fn t(rows: Vec<Vec<Rational>>) -> Tableau {
        Tableau::new(rows).unwrap()
    }

    /// rows (1,0,−1 | x, y | 0), listed bottom-up
    fn three(x: Rational, y: Rational) -> Tableau {
        t(vec![vec![int(0)], vec![x, y], vec![int(1), int(0), int(-1)]])
    }

    fn one_singular() -> Tableau {
        three(rat(1, 2), rat(-1, 2))
    }

    #[test]
    fn shape_is_validated() {
        assert_eq!(Tableau::new(vec![]), Err(TableauError::Empty));
        assert_eq!(Tableau::new(vec![vec![int(1)], vec![int(1)]]), Err(TableauError::RowLength { row: 2, got: 1 }));
    }

    #[test]
    fn gamma_examples() {
        let l = t(vec![vec![rat(7, 3)]]);
        assert_eq!(l.gamma_value(1, 1).unwrap(), rat(7, 3));
        let l = t(vec![vec![int(0)], vec![int(3), int(-1)]]);
        assert_eq!(l.gamma_value(2, 1).unwrap(), int(3));
        let swapped = t(vec![vec![int(0)], vec![int(-1), int(3)]]);
        assert_eq!(swapped.gamma_value(2, 1).unwrap(), int(3));
        assert_eq!(swapped.gamma_value(2, 2).unwrap(), l.gamma_value(2, 2).unwrap());
    }

    #[test]
    fn gamma_pole_is_an_error() {
        let l = three(rat(1, 2), rat(1, 2));
        assert_eq!(l.gamma_value(2, 1), Err(TableauError::RepeatedEntry { row: 2, value: rat(1, 2) }));
        assert!(l.gamma_value(1, 1).is_ok());
        assert!(l.gamma_value(4, 1).is_err());
    }

    #[test]
    fn classification_examples() {
        let generic = three(rat(1, 4), rat(-1, 2)).classify();
        assert_eq!(generic.kind, ClassKind::Generic);
        assert!(generic.singular_pairs.is_empty());
        let singular = one_singular().classify();
        assert_eq!(singular.kind, ClassKind::Singular(1));
        assert_eq!(singular.singular_pairs, vec![(2, 1, 2)]);
        assert!(singular.is_one_singular());
        let critical = three(rat(1, 2), rat(1, 2)).classify();
        assert_eq!(critical.kind, ClassKind::Critical);
    }

    #[test]
    fn top_row_pairs_are_not_singular() {
        // top row differences are integers, but only rows 2..n-1 count
        assert_eq!(three(rat(1, 3), rat(1, 2)).classify().kind, ClassKind::Generic);
    }

    #[test]
    fn canonical_ideal_examples() {
        let l = one_singular();
        let swapped = three(rat(-1, 2), rat(1, 2));
        assert_eq!(l.canonical_ideal(), swapped.canonical_ideal());
        assert_eq!(l.canonical_ideal(), l.canonical_ideal());
        let moved = l.lattice_shift(1, 1, 1).unwrap();
        assert_ne!(l.canonical_ideal(), moved.canonical_ideal());
        assert_eq!(moved.gamma_value(1, 1).unwrap() - l.gamma_value(1, 1).unwrap(), int(1));
    }

    #[test]
    fn lattice_shift_examples() {
        let l = one_singular();
        let up = l.lattice_shift(2, 1, 1).unwrap();
        assert_eq!(up, three(rat(3, 2), rat(-1, 2)));
        assert_eq!(up.lattice_shift(2, 1, -1).unwrap(), l);
        assert_eq!(l.lattice_offset(&up), Some(vec![0, 1, 0]));
        assert_eq!(l.lattice_shift(3, 1, 1), Err(TableauError::TopRowShift { row: 3 }));
        assert!(l.lattice_shift(2, 3, 1).is_err());
    }

    #[test]
    fn nc_component_examples() {
        let l = one_singular();
        let plus = l.lattice_shift(2, 1, 1).unwrap();
        assert_eq!(l.same_nc_component(&plus), Ok(true));
        let minus = l.lattice_shift(2, 1, -1).unwrap();
        assert_eq!(l.same_nc_component(&minus), Err(TableauError::Critical { row: 2 }));
        let minus2 = minus.lattice_shift(2, 1, -1).unwrap();
        assert_eq!(l.same_nc_component(&minus2), Ok(false));
        let off = three(rat(1, 3), rat(-1, 2));
        assert_eq!(l.same_nc_component(&off), Err(TableauError::NotInLattice));
    }

    #[test]
    fn orbit_examples() {
        let l = one_singular();
        let plus = l.lattice_shift(2, 1, 1).unwrap();
        assert_eq!(l.module_orbit_equivalent(&plus), Ok(true));
        let swapped_shifted = three(rat(-1, 2), rat(1, 2) + int(5));
        assert_eq!(l.module_orbit_equivalent(&swapped_shifted), Ok(true));
        let mut rows = l.rows().to_vec();
        rows[2][0] += rat(1, 2);
        assert_eq!(l.module_orbit_equivalent(&t(rows)), Ok(false));
        let generic = three(rat(1, 4), rat(-1, 2));
        assert_eq!(l.module_orbit_equivalent(&generic), Ok(false));
    }

    #[test]
    fn alpha_examples() {
        let l = t(vec![vec![rat(2, 5)]]);
        assert_eq!(l.alpha_polynomial(1).unwrap(), RationalPolynomial::linear(rat(2, 5)));
        let l = t(vec![vec![int(0)], vec![int(3), int(-1)]]);
        let a2 = l.alpha_polynomial(2).unwrap();
        assert_eq!(a2.coefficients(), &[int(-3), int(2), int(1)]);
        assert_eq!(a2.evaluate(&int(-3)), int(0));
        assert_eq!(l.alpha_value(2, &int(5)), a2.evaluate(&int(5)));
        assert_eq!(l.alpha_polynomial(0).unwrap(), RationalPolynomial::one());
        assert_eq!(l.alpha_value(0, &int(9)), int(1));
    }

    #[test]
    fn weight_tableau() {
        let l = Tableau::from_weight(&[int(5), int(2), int(-1)]).unwrap();
        assert_eq!(l.row(1), &[int(5)]);
        assert_eq!(l.row(3), &[int(5), int(1), int(-3)]);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=4).prop_map(|(p, q)| rat(p, q))
    }

    fn row_permutations(row: &[Rational]) -> Vec<Vec<Rational>> {
        crate::drinfeld::signed_permutations(row.len())
            .into_iter()
            .map(|(p, _)| p.iter().map(|&k| row[k].clone()).collect())
            .collect()
    }

    /// Brute force over G: try every row permutation of `b`.
    fn orbit_by_enumeration(a: &Tableau, b: &Tableau) -> bool {
        let n = a.rank();
        (1..=n).all(|m| {
            row_permutations(b.row(m)).iter().any(|p| {
                a.row(m).iter().zip(p).all(|(x, y)| {
                    let d = x - y;
                    if m == n {
                        d.is_zero()
                    } else {
                        d.is_integer()
                    }
                })
            })
        })
    }

    fn arb_tableau(n: usize) -> impl Strategy<Value = Tableau> {
        prop::collection::vec(small_rational(), n * (n + 1) / 2).prop_map(move |flat| {
            let mut rows = Vec::new();
            let mut it = flat.into_iter();
            for m in 1..=n {
                rows.push((0..m).map(|_| it.next().unwrap()).collect());
            }
            Tableau::new(rows).unwrap()
        })
    }

    proptest! {
        #[test]
        fn gamma_is_symmetric(l in arb_tableau(3), k in 1u32..=3, seed in 0usize..6) {
            prop_assume!(!l.is_critical());
            let perms = row_permutations(l.row(3));
            let mut rows = l.rows().to_vec();
            rows[2] = perms[seed].clone();
            let p = Tableau::new(rows).unwrap();
            prop_assert_eq!(l.gamma_value(3, k).unwrap(), p.gamma_value(3, k).unwrap());
        }

        #[test]
        fn orbit_matches_enumeration(a in arb_tableau(3), b in arb_tableau(3)) {
            prop_assert_eq!(a.module_orbit_equivalent(&b).unwrap(), orbit_by_enumeration(&a, &b));
        }

        #[test]
        fn shift_round_trip(l in arb_tableau(3), m in 1usize..=2, i in 1usize..=2, dir in prop::sample::select(vec![-1i64, 1])) {
            let i = i.min(m);
            let there = l.lattice_shift(m, i, dir).unwrap();
            prop_assert_eq!(there.lattice_shift(m, i, -dir).unwrap(), l.clone());
            prop_assert!(l.lattice_offset(&there).is_some());
        }

        #[test]
        fn canonical_keeps_gamma(l in arb_tableau(3), k in 1u32..=3) {
            prop_assume!(!l.is_critical());
            let c = l.canonical_ideal().to_tableau();
            for m in 1..=3 {
                prop_assert_eq!(l.gamma_value(m, k).unwrap(), c.gamma_value(m, k).unwrap());
            }
        }
    }
}
