//! Evaluation images of the Yangian `Y(gl_n)` in `U(gl_n)`.
//!
//! The evaluation map sends `T_ij(u)` to `δ_ij u + E_ji`. That transpose is applied once,
//! in [`TMatrix::new`]; everything downstream only sees the matrix of polynomials.
//! Quantum minors of that matrix give the Drinfeld generator polynomials
//! `a_m(u)`, `b_m(u)`, `c_m(u)` and `d_m(u)`, with the convention `a_0(u) = 1`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, Rewriter};
use crate::poly::{BiPolynomial, RationalPolynomial, UPolynomial};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DrinfeldError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("quantum determinant needs a non-empty square grid, got {rows} rows with a row of length {cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("index {what}={value} out of range (rank {rank})")]
    IndexOutOfRange { what: &'static str, value: usize, rank: usize },
    #[error("rank must be at least {min}, got {rank}")]
    RankTooSmall { rank: usize, min: usize },
    #[error("interpolation point {0} is repeated")]
    RepeatedPoint(Rational),
    #[error("{points} points and {values} values cannot determine a polynomial of degree at most {bound}")]
    PointCount { points: usize, values: usize, bound: usize },
}

/// Which quantum minor of the T-matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DrinfeldKind {
    A,
    B,
    C,
    D,
}

impl DrinfeldKind {
    pub const ALL: [DrinfeldKind; 4] = [Self::A, Self::B, Self::C, Self::D];

    pub fn letter(self) -> char {
        match self {
            Self::A => 'a',
            Self::B => 'b',
            Self::C => 'c',
            Self::D => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_lowercase() {
            'a' => Some(Self::A),
            'b' => Some(Self::B),
            'c' => Some(Self::C),
            'd' => Some(Self::D),
            _ => None,
        }
    }

    /// Row and column indices (1-based) of the submatrix whose quantum determinant is this minor.
    pub fn submatrix(self, m: usize) -> (Vec<usize>, Vec<usize>) {
        let first: Vec<usize> = (1..=m).collect();
        let mut swapped: Vec<usize> = (1..m).collect();
        swapped.push(m + 1);
        match self {
            Self::A => (first.clone(), first),
            Self::B => (swapped, first),
            Self::C => (first, swapped),
            Self::D => (swapped.clone(), swapped),
        }
    }

    /// Degree of the minor as a polynomial in `u`.
    pub fn degree(self, m: usize) -> usize {
        match self {
            Self::A | Self::D => m,
            Self::B | Self::C => m - 1,
        }
    }
}

impl fmt::Display for DrinfeldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// The `n × n` matrix with entry `(i, j)` equal to `δ_ij u + E_ji`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMatrix {
    rank: usize,
    entries: Vec<Vec<UPolynomial>>,
}

impl TMatrix {
    pub fn new(rank: usize) -> Self {
        let entries = (1..=rank)
            .map(|i| {
                (1..=rank)
                    .map(|j| {
                        let e = AlgebraElement::generator(rank, j, i).expect("indices in range");
                        let lead = if i == j { AlgebraElement::one(rank) } else { AlgebraElement::zero(rank) };
                        UPolynomial::from_coefficients(rank, vec![e, lead])
                    })
                    .collect()
            })
            .collect();
        Self { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &UPolynomial {
        &self.entries[i - 1][j - 1]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<UPolynomial>> {
        rows.iter().map(|&i| cols.iter().map(|&j| self.entry(i, j).clone()).collect()).collect()
    }
}

/// All permutations of `0..m` with their sign `(−1)^inversions`.
pub(crate) fn signed_permutations(m: usize) -> Vec<(Vec<usize>, i8)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i8)>) {
        let m = used.len();
        if prefix.len() == m {
            let mut inversions = 0;
            for a in 0..m {
                for b in a + 1..m {
                    if prefix[a] > prefix[b] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..m {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                rec(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// `Σ_σ sgn(σ) X_{1σ(1)}(u) X_{2σ(2)}(u−1) ⋯ X_{mσ(m)}(u−m+1)`, factors multiplied in row order.
pub fn quantum_determinant(grid: &[Vec<UPolynomial>]) -> Result<UPolynomial, DrinfeldError> {
    quantum_determinant_with(grid, &mut Rewriter::new())
}

pub fn quantum_determinant_with(grid: &[Vec<UPolynomial>], rw: &mut Rewriter) -> Result<UPolynomial, DrinfeldError> {
    let m = grid.len();
    if m == 0 {
        return Err(DrinfeldError::NonSquare { rows: 0, cols: 0 });
    }
    if let Some(bad) = grid.iter().find(|row| row.len() != m) {
        return Err(DrinfeldError::NonSquare { rows: m, cols: bad.len() });
    }
    let rank = grid[0][0].rank();
    // row r is evaluated at u − r
    let shifted: Vec<Vec<UPolynomial>> =
        grid.iter().enumerate().map(|(r, row)| row.iter().map(|p| p.shift_variable(r as i64)).collect()).collect();
    let mut total = UPolynomial::zero(rank);
    for (sigma, sign) in signed_permutations(m) {
        let mut term = UPolynomial::constant(AlgebraElement::one(rank));
        for (r, &c) in sigma.iter().enumerate() {
            let factor = &shifted[r][c];
            if factor.is_zero() {
                term = UPolynomial::zero(rank);
                break;
            }
            term = term.multiply_with(factor, rw)?;
        }
        total = if sign > 0 { total.try_add(&term)? } else { total.try_sub(&term)? };
    }
    Ok(total)
}

fn check_index(kind: DrinfeldKind, m: usize, rank: usize) -> Result<(), DrinfeldError> {
    let max = if kind == DrinfeldKind::A { rank } else { rank.saturating_sub(1) };
    if m == 0 || m > max {
        return Err(DrinfeldError::IndexOutOfRange { what: "m", value: m, rank });
    }
    Ok(())
}

/// The image of the quantum minor `A_m`, `B_m`, `C_m` or `D_m` in `U(gl_n)[u]`.
pub fn drinfeld_polynomial(rank: usize, kind: DrinfeldKind, m: usize) -> Result<UPolynomial, DrinfeldError> {
    check_index(kind, m, rank)?;
    let t = TMatrix::new(rank);
    let (rows, cols) = kind.submatrix(m);
    quantum_determinant(&t.submatrix(&rows, &cols))
}

/// All Drinfeld generator polynomials of one rank, computed once with a shared rewriter.
pub struct DrinfeldSet {
    rank: usize,
    a: Vec<UPolynomial>,
    b: Vec<UPolynomial>,
    c: Vec<UPolynomial>,
    d: Vec<UPolynomial>,
    rewriter: Rewriter,
}

impl DrinfeldSet {
    pub fn new(rank: usize) -> Result<Self, DrinfeldError> {
        if rank == 0 {
            return Err(DrinfeldError::RankTooSmall { rank, min: 1 });
        }
        let t = TMatrix::new(rank);
        let mut rw = Rewriter::new();
        let mut minors = |kind: DrinfeldKind, count: usize| -> Result<Vec<UPolynomial>, DrinfeldError> {
            (1..=count)
                .map(|m| {
                    let (rows, cols) = kind.submatrix(m);
                    quantum_determinant_with(&t.submatrix(&rows, &cols), &mut rw)
                })
                .collect()
        };
        let mut a = vec![UPolynomial::constant(AlgebraElement::one(rank))];
        a.extend(minors(DrinfeldKind::A, rank)?);
        let b = minors(DrinfeldKind::B, rank - 1)?;
        let c = minors(DrinfeldKind::C, rank - 1)?;
        let d = minors(DrinfeldKind::D, rank - 1)?;
        Ok(Self { rank, a, b, c, d, rewriter: rw })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `a_m(u)` for `0 ≤ m ≤ n`; `a_0 = 1`.
    pub fn a(&self, m: usize) -> &UPolynomial {
        &self.a[m]
    }

    pub fn b(&self, m: usize) -> &UPolynomial {
        &self.b[m - 1]
    }

    pub fn c(&self, m: usize) -> &UPolynomial {
        &self.c[m - 1]
    }

    pub fn d(&self, m: usize) -> &UPolynomial {
        &self.d[m - 1]
    }

    pub fn get(&self, kind: DrinfeldKind, m: usize) -> Result<&UPolynomial, DrinfeldError> {
        check_index(kind, m, self.rank)?;
        Ok(match kind {
            DrinfeldKind::A => self.a(m),
            DrinfeldKind::B => self.b(m),
            DrinfeldKind::C => self.c(m),
            DrinfeldKind::D => self.d(m),
        })
    }

    pub fn rewriter(&mut self) -> &mut Rewriter {
        &mut self.rewriter
    }

    fn bi_product(&mut self, x: &BiPolynomial, y: &BiPolynomial) -> Result<BiPolynomial, DrinfeldError> {
        Ok(x.multiply_with(y, &mut self.rewriter)?)
    }

    /// `[X(u), Y(v)]` as a polynomial in `u`, `v`.
    fn bracket_uv(&mut self, x: &UPolynomial, y: &UPolynomial) -> Result<BiPolynomial, DrinfeldError> {
        let (xu, yv) = (BiPolynomial::in_u(x), BiPolynomial::in_v(y));
        let xy = self.bi_product(&xu, &yv)?;
        let yx = self.bi_product(&yv, &xu)?;
        Ok(xy.try_sub(&yx)?)
    }

    /// `X(u)Y(v) − X(v)Y(u)`.
    fn exchange_uv(&mut self, x: &UPolynomial, y: &UPolynomial) -> Result<BiPolynomial, DrinfeldError> {
        let first = self.bi_product(&BiPolynomial::in_u(x), &BiPolynomial::in_v(y))?;
        let second = self.bi_product(&BiPolynomial::in_v(x), &BiPolynomial::in_u(y))?;
        Ok(first.try_sub(&second)?)
    }

    fn univariate(&mut self, x: &UPolynomial, y: &UPolynomial) -> Result<UPolynomial, DrinfeldError> {
        Ok(x.multiply_with(y, &mut self.rewriter)?)
    }

    /// Checks every instance of the nine commutation-relation families.
    pub fn verify_relations(&mut self) -> Result<RelationReport, DrinfeldError> {
        let n = self.rank;
        if n < 2 {
            return Err(DrinfeldError::RankTooSmall { rank: n, min: 2 });
        }
        let mut instances = Vec::new();
        let mut push = |family, m, l, letter, residual: BiPolynomial| {
            instances.push(RelationInstance { family, m, l, letter, residual });
        };

        // (i), (ii): [A_m(u), S_l(v)] = 0 for l ≠ m
        for (family, kind) in [(RelationFamily::I, DrinfeldKind::B), (RelationFamily::II, DrinfeldKind::C)] {
            for m in 1..=n {
                for l in (1..n).filter(|&l| l != m) {
                    let (x, y) = (self.a(m).clone(), self.get(kind, l)?.clone());
                    let r = self.bracket_uv(&x, &y)?;
                    push(family, m, Some(l), Some(kind), r);
                }
            }
        }
        // (iii): [C_m(u), B_l(v)] = 0 for l ≠ m
        for m in 1..n {
            for l in (1..n).filter(|&l| l != m) {
                let (x, y) = (self.c(m).clone(), self.b(l).clone());
                let r = self.bracket_uv(&x, &y)?;
                push(RelationFamily::III, m, Some(l), None, r);
            }
        }
        // (iv): [S_m(u), S_l(v)] = 0 for |l − m| ≠ 1
        for kind in [DrinfeldKind::B, DrinfeldKind::C] {
            for m in 1..n {
                for l in (1..n).filter(|&l| l.abs_diff(m) != 1) {
                    let (x, y) = (self.get(kind, m)?.clone(), self.get(kind, l)?.clone());
                    let r = self.bracket_uv(&x, &y)?;
                    push(RelationFamily::IV, m, Some(l), Some(kind), r);
                }
            }
        }
        for m in 1..n {
            let (a, b, c, d) = (self.a(m).clone(), self.b(m).clone(), self.c(m).clone(), self.d(m).clone());
            // (v): (u − v)[A_m(u), C_m(v)] = C_m(u)A_m(v) − C_m(v)A_m(u)
            let lhs = self.bracket_uv(&a, &c)?.times_u_minus_v();
            let rhs = self.exchange_uv(&c, &a)?;
            push(RelationFamily::V, m, None, None, lhs.try_sub(&rhs)?);
            // (vi): (u − v)[A_m(u), B_m(v)] = −B_m(u)A_m(v) + B_m(v)A_m(u)
            let lhs = self.bracket_uv(&a, &b)?.times_u_minus_v();
            let rhs = self.exchange_uv(&b, &a)?;
            push(RelationFamily::VI, m, None, None, lhs.try_add(&rhs)?);
            // (vii): (u − v)[C_m(u), B_m(v)] = −D_m(u)A_m(v) + D_m(v)A_m(u)
            let lhs = self.bracket_uv(&c, &b)?.times_u_minus_v();
            let rhs = self.exchange_uv(&d, &a)?;
            push(RelationFamily::VII, m, None, None, lhs.try_add(&rhs)?);

            let outer = {
                let (up, down) = (self.a(m + 1).clone(), self.a(m - 1).shift_variable(1));
                self.univariate(&up, &down)?
            };
            // (viii): B_m(u)C_m(u − 1) = D_m(u)A_m(u − 1) − A_{m+1}(u)A_{m−1}(u − 1)
            let lhs = self.univariate(&b, &c.shift_variable(1))?;
            let da = self.univariate(&d, &a.shift_variable(1))?;
            let r = lhs.try_sub(&da)?.try_add(&outer)?;
            push(RelationFamily::VIII, m, None, None, BiPolynomial::in_u(&r));
            // (ix): C_m(u − 1)B_m(u) = D_m(u − 1)A_m(u) − A_{m+1}(u)A_{m−1}(u − 1)
            let lhs = self.univariate(&c.shift_variable(1), &b)?;
            let da = self.univariate(&d.shift_variable(1), &a)?;
            let r = lhs.try_sub(&da)?.try_add(&outer)?;
            push(RelationFamily::IX, m, None, None, BiPolynomial::in_u(&r));
        }
        Ok(RelationReport { rank: n, instances })
    }
}

/// Gelfand-Tsetlin generator `c_mk = Σ E_{i1 i2} E_{i2 i3} ⋯ E_{ik i1}` over `{1..m}^k`.
pub fn gt_generator(rank: usize, m: usize, k: usize) -> Result<AlgebraElement, DrinfeldError> {
    gt_generator_with(rank, m, k, &mut Rewriter::new())
}

pub fn gt_generator_with(rank: usize, m: usize, k: usize, rw: &mut Rewriter) -> Result<AlgebraElement, DrinfeldError> {
    if m == 0 || m > rank {
        return Err(DrinfeldError::IndexOutOfRange { what: "m", value: m, rank });
    }
    if k == 0 || k > m {
        return Err(DrinfeldError::IndexOutOfRange { what: "k", value: k, rank });
    }
    let mut total = AlgebraElement::zero(rank);
    let mut tuple = vec![1usize; k];
    loop {
        let mut term = AlgebraElement::one(rank);
        for s in 0..k {
            let g = AlgebraElement::generator(rank, tuple[s], tuple[(s + 1) % k])?;
            term = rw.product(&term, &g)?;
        }
        total = total.try_add(&term)?;
        // odometer over {1..m}^k
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(total);
            }
            tuple[pos] += 1;
            if tuple[pos] <= m {
                break;
            }
            tuple[pos] = 1;
            pos += 1;
        }
    }
}

/// Lagrange basis polynomial for node `i`: `Π_{j≠i} (u − x_j)/(x_i − x_j)`.
pub fn lagrange_basis(points: &[Rational], i: usize) -> RationalPolynomial {
    let mut p = RationalPolynomial::one();
    for (j, xj) in points.iter().enumerate() {
        if j == i {
            continue;
        }
        let denom = &points[i] - xj;
        let factor = RationalPolynomial::from_coefficients(vec![-xj / &denom, Rational::one() / &denom]);
        p = p.multiply(&factor);
    }
    p
}

/// The unique polynomial of degree at most `degree_bound` taking `values[i]` at `points[i]`.
pub fn interpolate(points: &[Rational], values: &[AlgebraElement], degree_bound: usize) -> Result<UPolynomial, DrinfeldError> {
    if points.len() != values.len() || points.len() != degree_bound + 1 {
        return Err(DrinfeldError::PointCount { points: points.len(), values: values.len(), bound: degree_bound });
    }
    for (i, x) in points.iter().enumerate() {
        if points[..i].contains(x) {
            return Err(DrinfeldError::RepeatedPoint(x.clone()));
        }
    }
    let rank = values[0].rank();
    if let Some(bad) = values.iter().find(|v| v.rank() != rank) {
        return Err(AlgebraError::RankMismatch { left: rank, right: bad.rank() }.into());
    }
    let mut coeffs = vec![AlgebraElement::zero(rank); degree_bound + 1];
    for (i, value) in values.iter().enumerate() {
        let basis = lagrange_basis(points, i);
        for (d, c) in basis.coefficients().iter().enumerate() {
            if !c.is_zero() {
                coeffs[d] = &coeffs[d] + &value.scale(c);
            }
        }
    }
    Ok(UPolynomial::from_coefficients(rank, coeffs))
}

/// The nine families of commutation relations between the Drinfeld generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationFamily {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 9] =
        [Self::I, Self::II, Self::III, Self::IV, Self::V, Self::VI, Self::VII, Self::VIII, Self::IX];

    pub fn label(self) -> &'static str {
        match self {
            Self::I => "i",
            Self::II => "ii",
            Self::III => "iii",
            Self::IV => "iv",
            Self::V => "v",
            Self::VI => "vi",
            Self::VII => "vii",
            Self::VIII => "viii",
            Self::IX => "ix",
        }
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One checked identity: the residual is `lhs − rhs` as a polynomial in `u`, `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: RelationFamily,
    pub m: usize,
    /// Second index for the families that pair two different minors.
    pub l: Option<usize>,
    /// Minor letter for (i), (ii) and (iv).
    pub letter: Option<DrinfeldKind>,
    pub residual: BiPolynomial,
}

impl RelationInstance {
    pub fn passes(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub rank: usize,
    pub instances: Vec<RelationInstance>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.instances.iter().all(RelationInstance::passes)
    }

    pub fn family(&self, family: RelationFamily) -> impl Iterator<Item = &RelationInstance> {
        self.instances.iter().filter(move |i| i.family == family)
    }

    pub fn family_passes(&self, family: RelationFamily) -> bool {
        self.family(family).all(RelationInstance::passes)
    }
}

/// Convenience wrapper: builds all generators of rank `n` and checks every relation.
pub fn verify_nt_relations(rank: usize) -> Result<RelationReport, DrinfeldError> {
    if rank < 2 {
        return Err(DrinfeldError::RankTooSmall { rank, min: 2 });
    }
    DrinfeldSet::new(rank)?.verify_relations()
}
