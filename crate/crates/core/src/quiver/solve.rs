//! One-dimensional representations of a window: gauge fixing on a spanning tree, then
//! propagation through the product and square relations.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Constraint, EdgeKind, Move, QuiverError, QuiverWindow};
use crate::rational::Rational;
use crate::tableau::GtIdeal;

/// How the gauge tree is grown from the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanningTree {
    BreadthFirst,
    DepthFirst,
    /// Depth-first with neighbours shuffled by a seeded generator.
    Random(u64),
}

/// Edge scalars of a window module; vertex `k` carries the basis vector `e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    scalars: Vec<Rational>,
    tree_edges: Vec<usize>,
    loops: Vec<Vec<Rational>>,
}

impl ModuleRep {
    /// Wraps externally computed edge scalars; loops take the window values.
    pub fn from_scalars(window: &QuiverWindow, scalars: Vec<Rational>) -> Result<Self, QuiverError> {
        if scalars.len() != window.edges().len() {
            return Err(QuiverError::WindowMismatch);
        }
        let loops = (0..window.vertices().len()).map(|v| window.loops(v).iter().map(|l| l.value.clone()).collect()).collect();
        Ok(Self { scalars, tree_edges: Vec::new(), loops })
    }

    pub fn scalars(&self) -> &[Rational] {
        &self.scalars
    }

    pub fn scalar(&self, edge: usize) -> &Rational {
        &self.scalars[edge]
    }

    /// The `c`-edges fixed to 1 by the gauge.
    pub fn tree_edges(&self) -> &[usize] {
        &self.tree_edges
    }

    /// Loop scalars at a vertex, aligned with [`QuiverWindow::loops`].
    pub fn loop_values(&self, vertex: usize) -> &[Rational] {
        &self.loops[vertex]
    }

    pub fn basis_label(window: &QuiverWindow, vertex: usize) -> &GtIdeal {
        &window.vertices()[vertex].ideal
    }

    /// Product of edge scalars along `moves` applied in order from `start`.
    pub fn path_product(&self, window: &QuiverWindow, start: usize, moves: &[Move]) -> Result<(Rational, usize), QuiverError> {
        if start >= window.vertices().len() {
            return Err(QuiverError::UnknownVertex(start));
        }
        let mut at = start;
        let mut product = Rational::one();
        for (step, mv) in moves.iter().enumerate() {
            let e = window.edge_from(at, *mv).ok_or(QuiverError::LeavesWindow { step })?;
            product *= &self.scalars[e];
            at = window.edges()[e].target;
        }
        Ok((product, at))
    }

    /// Scalar by which a cycle acts on `e_start`.
    pub fn cycle_product(&self, window: &QuiverWindow, start: usize, moves: &[Move]) -> Result<Rational, QuiverError> {
        let (product, end) = self.path_product(window, start, moves)?;
        if end != start {
            return Err(QuiverError::NotACycle);
        }
        Ok(product)
    }

    /// Residual of every relation instance, in the order of [`QuiverWindow::relation_instances`].
    pub fn residuals(&self, window: &QuiverWindow) -> Vec<Rational> {
        window
            .relation_instances()
            .iter()
            .map(|c| match c {
                Constraint::Product { first, second, scalar, .. } => &self.scalars[*first] * &self.scalars[*second] - scalar,
                Constraint::Square { left, right, .. } => {
                    &self.scalars[left[0]] * &self.scalars[left[1]] - &self.scalars[right[0]] * &self.scalars[right[1]]
                }
                Constraint::Loop { vertex, index, value } => &self.loops[*vertex][*index] - value,
            })
            .collect()
    }
}

/// Tree links as `c`-edge ids, grown from vertex 0.
fn spanning_tree(window: &QuiverWindow, strategy: SpanningTree) -> Vec<usize> {
    let count = window.vertices().len();
    let mut neighbours: Vec<Vec<(usize, usize)>> = vec![Vec::new(); count];
    for (id, e) in window.edges().iter().enumerate() {
        // one undirected link per c-edge; record it from both ends
        if e.kind == EdgeKind::C {
            neighbours[e.source].push((e.target, id));
            neighbours[e.target].push((e.source, id));
        }
    }
    let mut rng = match strategy {
        SpanningTree::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut seen = vec![false; count];
    let mut links = Vec::new();
    for start in 0..count {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut frontier = VecDeque::from([start]);
        while let Some(v) = match strategy {
            SpanningTree::BreadthFirst => frontier.pop_front(),
            _ => frontier.pop_back(),
        } {
            let mut next = neighbours[v].clone();
            if let Some(rng) = rng.as_mut() {
                next.shuffle(rng);
            }
            for (u, id) in next {
                if !seen[u] {
                    seen[u] = true;
                    links.push(id);
                    frontier.push_back(u);
                }
            }
        }
    }
    links
}

/// The one-dimensional module on `window`, normalised so that tree `c`-edges act by 1.
pub fn solve_module(window: &QuiverWindow, strategy: SpanningTree) -> Result<ModuleRep, QuiverError> {
    let sites = window.zero_sites();
    if !sites.is_empty() {
        return Err(QuiverError::NonGenericWindow { sites });
    }
    let constraints = window.relation_instances();
    let mut known: Vec<Option<Rational>> = vec![None; window.edges().len()];

    let tree_edges = spanning_tree(window, strategy);
    for &id in &tree_edges {
        known[id] = Some(Rational::one());
    }

    let mut changed = true;
    while changed {
        changed = false;
        for c in &constraints {
            match c {
                Constraint::Product { first, second, scalar, .. } => match (&known[*first], &known[*second]) {
                    (Some(a), None) => {
                        known[*second] = Some(scalar / a);
                        changed = true;
                    }
                    (None, Some(b)) => {
                        known[*first] = Some(scalar / b);
                        changed = true;
                    }
                    _ => {}
                },
                Constraint::Square { left, right, .. } => {
                    let ids = [left[0], left[1], right[0], right[1]];
                    let unknown: Vec<usize> = (0..4).filter(|&k| known[ids[k]].is_none()).collect();
                    if unknown.len() != 1 {
                        continue;
                    }
                    let k = unknown[0];
                    let value = |j: usize| known[ids[j]].clone().unwrap();
                    let (partner, other) =
                        if k < 2 { (value(1 - k), value(2) * value(3)) } else { (value(5 - k), value(0) * value(1)) };
                    if partner.is_zero() {
                        continue;
                    }
                    known[ids[k]] = Some(other / partner);
                    changed = true;
                }
                Constraint::Loop { .. } => {}
            }
        }
    }

    let missing: Vec<usize> = (0..known.len()).filter(|&k| known[k].is_none()).collect();
    if !missing.is_empty() {
        return Err(QuiverError::Underdetermined { edges: missing });
    }
    let mut rep = ModuleRep::from_scalars(window, known.into_iter().map(Option::unwrap).collect())?;
    rep.tree_edges = tree_edges;
    let residuals: Vec<(usize, Rational)> = rep.residuals(window).into_iter().enumerate().filter(|(_, r)| !r.is_zero()).collect();
    if !residuals.is_empty() {
        return Err(QuiverError::InconsistentConstraints { residuals });
    }
    Ok(rep)
}

/// Whether some vertex rescaling turns `a` into `b`.
pub fn gauge_equivalent(window: &QuiverWindow, a: &ModuleRep, b: &ModuleRep) -> Result<bool, QuiverError> {
    let count = window.vertices().len();
    if a.scalars.len() != window.edges().len() || b.scalars.len() != window.edges().len() {
        return Err(QuiverError::WindowMismatch);
    }
    if a.loops != b.loops {
        return Ok(false);
    }
    // b(e) = a(e) g(source) / g(target)
    let mut gauge: Vec<Option<Rational>> = vec![None; count];
    let mut links: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (id, e) in window.edges().iter().enumerate() {
        links[e.source].push(id);
        links[e.target].push(id);
    }
    for start in 0..count {
        if gauge[start].is_some() {
            continue;
        }
        gauge[start] = Some(Rational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &id in &links[v] {
                let e = &window.edges()[id];
                let (sa, sb) = (&a.scalars[id], &b.scalars[id]);
                if sa.is_zero() || sb.is_zero() {
                    continue;
                }
                let gv = gauge[v].clone().unwrap();
                let (other, value) = if e.source == v { (e.target, sa * &gv / sb) } else { (e.source, sb * &gv / sa) };
                if gauge[other].is_none() {
                    gauge[other] = Some(value);
                    queue.push_back(other);
                }
            }
        }
    }
    Ok(window.edges().iter().enumerate().all(|(id, e)| {
        let gs = gauge[e.source].as_ref().unwrap();
        let gt = gauge[e.target].as_ref().unwrap();
        &b.scalars[id] * gt == &a.scalars[id] * gs
    }))
}

#[cfg(test)]
mod tests {
    use super::super::build_window;
    use super::*;
    use crate::rational::{int, rat};
    use crate::tableau::Tableau;

    fn rank_two() -> Tableau {
        Tableau::new(vec![vec![rat(1, 3)], vec![int(2), int(-1)]]).unwrap()
    }

    fn generic_three() -> Tableau {
        Tableau::new(vec![vec![rat(1, 5)], vec![rat(1, 3), rat(1, 7)], vec![int(0), rat(1, 2), rat(-1, 2)]]).unwrap()
    }

    #[test]
    fn radius_zero_has_only_loops() {
        let w = build_window(&rank_two(), 0).unwrap();
        let rep = solve_module(&w, SpanningTree::BreadthFirst).unwrap();
        assert!(rep.scalars().is_empty());
        assert_eq!(rep.loop_values(0).len(), 2);
        assert_eq!(rep.loop_values(0)[1], w.root().alpha_value(2, &rat(-1, 3)));
    }

    #[test]
    fn rank_two_values() {
        let root = rank_two();
        let w = build_window(&root, 1).unwrap();
        let rep = solve_module(&w, SpanningTree::BreadthFirst).unwrap();
        for (id, e) in w.edges().iter().enumerate() {
            if e.kind == EdgeKind::C {
                assert_eq!(rep.scalar(id), &int(1));
            }
        }
        let b = w.edge_from(0, Move::new(EdgeKind::B, 1, 1)).unwrap();
        assert_eq!(rep.scalar(b), &-root.alpha_value(2, &rat(-1, 3)));
    }

    #[test]
    fn generic_rank_three_solves() {
        let w = build_window(&generic_three(), 2).unwrap();
        let rep = solve_module(&w, SpanningTree::BreadthFirst).unwrap();
        assert!(rep.residuals(&w).iter().all(Zero::is_zero));
        for strategy in [SpanningTree::DepthFirst, SpanningTree::Random(7), SpanningTree::Random(8)] {
            let other = solve_module(&w, strategy).unwrap();
            assert!(gauge_equivalent(&w, &rep, &other).unwrap());
        }
    }

    #[test]
    fn zero_products_are_refused() {
        // row 1 entry equal to a row 2 entry makes α_2(−l_11) vanish
        let root = Tableau::new(vec![vec![int(2)], vec![int(2), int(-1)]]).unwrap();
        let w = build_window(&root, 1).unwrap();
        match solve_module(&w, SpanningTree::BreadthFirst) {
            Err(QuiverError::NonGenericWindow { sites }) => assert!(!sites.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rescaling_is_detected() {
        let w = build_window(&rank_two(), 1).unwrap();
        let rep = solve_module(&w, SpanningTree::BreadthFirst).unwrap();
        let mut scaled = rep.clone();
        // rescale the basis vector at vertex 2
        for (id, e) in w.edges().iter().enumerate() {
            if e.target == 2 {
                scaled.scalars[id] /= int(3);
            }
            if e.source == 2 {
                scaled.scalars[id] *= int(3);
            }
        }
        assert!(gauge_equivalent(&w, &rep, &scaled).unwrap());
        let mut broken = rep.clone();
        broken.scalars[0] *= int(2);
        assert!(!gauge_equivalent(&w, &rep, &broken).unwrap());
    }
}
