//! Finite windows of the Drinfeld quiver of a non-critical tableau.
//!
//! A window keeps the vertices of the non-critical component of `L_Z` within a given
//! L1 distance of the root. Edges are the evaluated operators `b_m(−l'_mi)` and
//! `c_m(−l'_mi)`; an edge whose target is not a window vertex is kept on a separate
//! boundary list and takes part in no relation.

mod cycle;
mod solve;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::rational::Rational;
use crate::tableau::{free_positions, GtIdeal, Tableau, TableauError};

pub use cycle::{cyclic_dimension_probe, random_cycles, reduce_cycle, PathWord, ProbeReport, Run};
pub use solve::{gauge_equivalent, solve_module, ModuleRep, SpanningTree};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("root tableau is critical in row {row}")]
    CriticalRoot { row: usize },
    #[error("{} product constraint(s) vanish; the window meets the reducibility locus", sites.len())]
    NonGenericWindow { sites: Vec<ZeroSite> },
    #[error("{} constraint(s) left nonzero residuals", residuals.len())]
    InconsistentConstraints { residuals: Vec<(usize, Rational)> },
    #[error("{} edge scalar(s) are not determined by the window relations", edges.len())]
    Underdetermined { edges: Vec<usize> },
    #[error("vertex {0} is not in the window")]
    UnknownVertex(usize),
    #[error("step {step} has no edge inside the window")]
    LeavesWindow { step: usize },
    #[error("word does not return to its start vertex")]
    NotACycle,
    #[error("module and window disagree on the number of edges")]
    WindowMismatch,
    #[error("rewriting stalled with {remaining} moves left")]
    Irreducible { remaining: usize },
}

/// Raising (`b`) or lowering (`c`) arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    B,
    C,
}

impl EdgeKind {
    pub fn letter(self) -> char {
        match self {
            Self::B => 'b',
            Self::C => 'c',
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Self::B => Self::C,
            Self::C => Self::B,
        }
    }

    /// Lattice direction of the target: `+1` for `b`, `−1` for `c`.
    pub fn direction(self) -> i64 {
        match self {
            Self::B => 1,
            Self::C => -1,
        }
    }
}

/// An arrow type read off a vertex: kind at tableau position `(row, pos)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub kind: EdgeKind,
    pub row: usize,
    pub pos: usize,
}

impl Move {
    pub fn new(kind: EdgeKind, row: usize, pos: usize) -> Self {
        Self { kind, row, pos }
    }

    pub fn inverse(self) -> Self {
        Self { kind: self.kind.opposite(), ..self }
    }

    pub fn same_position(&self, other: &Self) -> bool {
        self.row == other.row && self.pos == other.pos
    }

    /// Whether the two operators commute on a weight vector (cross-row mixed pairs,
    /// same-row mixed pairs at distinct positions, same-kind pairs in non-adjacent rows).
    pub fn commutes_with(&self, other: &Self) -> bool {
        if self.same_position(other) {
            return false;
        }
        if self.kind != other.kind {
            return true;
        }
        self.row.abs_diff(other.row) != 1
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}.{}", self.kind.letter(), self.row, self.pos)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub ideal: GtIdeal,
    pub representative: Tableau,
    /// Integer shift from the root over [`free_positions`].
    pub offset: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub kind: EdgeKind,
    pub row: usize,
    pub pos: usize,
    /// `−l'_mi` read at the source.
    pub spectral_point: Rational,
    pub source: usize,
    pub target: usize,
}

impl Edge {
    pub fn as_move(&self) -> Move {
        Move::new(self.kind, self.row, self.pos)
    }
}

/// Why an arrow out of a window vertex has no target in the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryReason {
    OutsideRadius,
    Critical,
    OtherComponent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryEdge {
    pub kind: EdgeKind,
    pub row: usize,
    pub pos: usize,
    pub spectral_point: Rational,
    pub source: usize,
    pub reason: BoundaryReason,
}

/// `α_k(−l'_mi)` at one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopValue {
    pub level: usize,
    pub row: usize,
    pub pos: usize,
    pub point: Rational,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverWindow {
    root: Tableau,
    radius: u32,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    boundary: Vec<BoundaryEdge>,
    loops: Vec<Vec<LoopValue>>,
    index: BTreeMap<Vec<i64>, usize>,
    out: BTreeMap<(usize, Move), usize>,
}

/// Integer vectors of length `dim` with L1 norm at most `radius`, by norm and then
/// lexicographically.
fn ball(dim: usize, radius: u32) -> Vec<Vec<i64>> {
    let r = i64::from(radius);
    let mut all = Vec::new();
    let mut current = Vec::with_capacity(dim);
    fn rec(dim: usize, budget: i64, current: &mut Vec<i64>, all: &mut Vec<Vec<i64>>) {
        if current.len() == dim {
            all.push(current.clone());
            return;
        }
        for x in -budget..=budget {
            current.push(x);
            rec(dim, budget - x.abs(), current, all);
            current.pop();
        }
    }
    rec(dim, r, &mut current, &mut all);
    all.sort_by(|a, b| {
        let na: i64 = a.iter().map(|x| x.abs()).sum();
        let nb: i64 = b.iter().map(|x| x.abs()).sum();
        na.cmp(&nb).then_with(|| a.cmp(b))
    });
    all
}

/// The window of radius `radius` around `root`.
pub fn build_window(root: &Tableau, radius: u32) -> Result<QuiverWindow, QuiverError> {
    if let Some(row) = root.critical_row() {
        return Err(QuiverError::CriticalRoot { row });
    }
    let n = root.rank();
    let positions = free_positions(n);
    let mut vertices = Vec::new();
    let mut index = BTreeMap::new();
    for shift in ball(positions.len(), radius) {
        let t = root.shifted(&shift);
        if t.is_critical() || !root.same_nc_component(&t)? {
            continue;
        }
        index.insert(shift.clone(), vertices.len());
        vertices.push(Vertex { ideal: t.canonical_ideal(), representative: t, offset: shift });
    }

    let mut edges = Vec::new();
    let mut boundary = Vec::new();
    let mut out = BTreeMap::new();
    let mut loops = Vec::new();
    for (s, v) in vertices.iter().enumerate() {
        for (slot, &(m, i)) in positions.iter().enumerate() {
            let point = -v.representative.entry(m, i).clone();
            for kind in [EdgeKind::B, EdgeKind::C] {
                let mut target = v.offset.clone();
                target[slot] += kind.direction();
                if let Some(&t) = index.get(&target) {
                    out.insert((s, Move::new(kind, m, i)), edges.len());
                    edges.push(Edge { kind, row: m, pos: i, spectral_point: point.clone(), source: s, target: t });
                } else {
                    let shifted = v.representative.lattice_shift(m, i, kind.direction())?;
                    let reason = if shifted.is_critical() {
                        BoundaryReason::Critical
                    } else if !root.same_nc_component(&shifted)? {
                        BoundaryReason::OtherComponent
                    } else {
                        BoundaryReason::OutsideRadius
                    };
                    boundary.push(BoundaryEdge { kind, row: m, pos: i, spectral_point: point.clone(), source: s, reason });
                }
            }
        }
        let mut here = Vec::new();
        for &(m, i) in &positions {
            let point = -v.representative.entry(m, i).clone();
            for level in 1..=n {
                let value = v.representative.alpha_value(level, &point);
                here.push(LoopValue { level, row: m, pos: i, point: point.clone(), value });
            }
        }
        loops.push(here);
    }

    Ok(QuiverWindow { root: root.clone(), radius, vertices, edges, boundary, loops, index, out })
}

impl QuiverWindow {
    pub fn root(&self) -> &Tableau {
        &self.root
    }

    /// Index of the root vertex; always 0.
    pub fn root_index(&self) -> usize {
        0
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn boundary(&self) -> &[BoundaryEdge] {
        &self.boundary
    }

    pub fn loops(&self, vertex: usize) -> &[LoopValue] {
        &self.loops[vertex]
    }

    pub fn vertex_at(&self, offset: &[i64]) -> Option<usize> {
        self.index.get(offset).copied()
    }

    /// The window edge leaving `vertex` along `mv`.
    pub fn edge_from(&self, vertex: usize, mv: Move) -> Option<usize> {
        self.out.get(&(vertex, mv)).copied()
    }

    /// Ids of the edges leaving `vertex`, in enumeration order.
    pub fn edges_from(&self, vertex: usize) -> impl Iterator<Item = usize> + '_ {
        self.out.range((vertex, Move::new(EdgeKind::B, 0, 0))..).take_while(move |((s, _), _)| *s == vertex).map(|(_, &e)| e)
    }

    /// The arrow types of the lattice, in a fixed order.
    pub fn moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for (m, i) in free_positions(self.root.rank()) {
            out.push(Move::new(EdgeKind::B, m, i));
            out.push(Move::new(EdgeKind::C, m, i));
        }
        out
    }

    /// Relation instances of the window in a fixed order: products, squares, loops.
    pub fn relation_instances(&self) -> Vec<Constraint> {
        let mut out = Vec::new();
        for (x, v) in self.vertices.iter().enumerate() {
            for mv in self.moves() {
                let Some(first) = self.edge_from(x, mv) else { continue };
                let target = self.edges[first].target;
                let Some(second) = self.edge_from(target, mv.inverse()) else { continue };
                out.push(Constraint::Product { vertex: x, first, second, scalar: return_scalar(&v.representative, mv) });
            }
        }
        let moves = self.moves();
        for x in 0..self.vertices.len() {
            for (a, p) in moves.iter().enumerate() {
                for q in &moves[a + 1..] {
                    if !p.commutes_with(q) {
                        continue;
                    }
                    let path = |first: Move, second: Move| -> Option<[usize; 2]> {
                        let e1 = self.edge_from(x, first)?;
                        let e2 = self.edge_from(self.edges[e1].target, second)?;
                        Some([e1, e2])
                    };
                    if let (Some(left), Some(right)) = (path(*p, *q), path(*q, *p)) {
                        let family = if p.kind == q.kind {
                            SquareFamily::SameKind
                        } else if p.row == q.row {
                            SquareFamily::SameRow
                        } else {
                            SquareFamily::CrossRow
                        };
                        out.push(Constraint::Square { vertex: x, family, left, right });
                    }
                }
            }
        }
        for (x, here) in self.loops.iter().enumerate() {
            for (k, l) in here.iter().enumerate() {
                out.push(Constraint::Loop { vertex: x, index: k, value: l.value.clone() });
            }
        }
        out
    }

    /// Product constraints with zero scalar.
    pub fn zero_sites(&self) -> Vec<ZeroSite> {
        self.relation_instances()
            .iter()
            .filter_map(|c| match c {
                Constraint::Product { vertex, first, scalar, .. } if scalar.is_zero() => {
                    Some(ZeroSite { vertex: *vertex, mv: self.edges[*first].as_move() })
                }
                _ => None,
            })
            .collect()
    }
}

/// Scalar of the two-step round trip `mv` then `mv.inverse()` starting at `l`:
/// `−α_{m+1}(−l_mi)α_{m−1}(−l_mi−1)` for `b` first, `−α_{m+1}(−l_mi+1)α_{m−1}(−l_mi)` for `c` first.
pub fn return_scalar(l: &Tableau, mv: Move) -> Rational {
    let x = -l.entry(mv.row, mv.pos).clone();
    let one = Rational::from_integer(1.into());
    let (upper, lower) = match mv.kind {
        EdgeKind::B => (x.clone(), x - one),
        EdgeKind::C => (&x + &one, x),
    };
    -(l.alpha_value(mv.row + 1, &upper) * l.alpha_value(mv.row - 1, &lower))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroSite {
    pub vertex: usize,
    pub mv: Move,
}

/// Which commutation gives a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareFamily {
    /// `b` and `c` in different rows.
    CrossRow,
    /// Both arrows of one kind in rows that are not adjacent (or the same row).
    SameKind,
    /// `b` and `c` at two positions of one row.
    SameRow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// `scalar(second) · scalar(first) = scalar`, `first` leaving `vertex`.
    Product { vertex: usize, first: usize, second: usize, scalar: Rational },
    /// Both two-edge paths out of `vertex` have the same product.
    Square { vertex: usize, family: SquareFamily, left: [usize; 2], right: [usize; 2] },
    /// The loop `a_k` acts at `vertex` by `value` (entry `index` of [`QuiverWindow::loops`]).
    Loop { vertex: usize, index: usize, value: Rational },
}

impl Constraint {
    pub fn vertex(&self) -> usize {
        match self {
            Self::Product { vertex, .. } | Self::Square { vertex, .. } | Self::Loop { vertex, .. } => *vertex,
        }
    }
}
