//! Window, solver and cycle-reduction properties on randomly drawn roots.

use std::collections::BTreeSet;

use drinfeld_core::quiver::{
    build_window, gauge_equivalent, random_cycles, reduce_cycle, solve_module, Constraint, EdgeKind, Move, PathWord, SpanningTree,
};
use drinfeld_core::rational::{int, rat};
use drinfeld_core::{Rational, Tableau};
use num_traits::Zero;
use proptest::prelude::*;

const DENOMINATORS: [i64; 3] = [7, 11, 13];

/// Rows 1 and 2 get distinct prime denominators, so no difference between entries of
/// neighbouring rows is an integer anywhere in the lattice.
fn generic_root() -> impl Strategy<Value = Tableau> {
    (prop::collection::vec((-3i64..=3, 1i64..=6), 3), prop::sample::subsequence(vec![-2i64, -1, 0, 1, 2], 3)).prop_map(
        |(inner, top)| {
            let entry = |k: usize| {
                let (a, b) = inner[k];
                int(a) + rat(b, DENOMINATORS[k])
            };
            Tableau::new(vec![vec![entry(0)], vec![entry(1), entry(2)], top.iter().map(|&t| int(t) + rat(1, 2)).collect()])
                .unwrap()
        },
    )
}

/// `−α_{m+1}(x)α_{m−1}(x − 1)` at `x = −l_mi` from the character polynomials.
fn round_trip_scalar(l: &Tableau, mv: Move) -> Rational {
    let x = -l.entry(mv.row, mv.pos).clone();
    let eval = |k: usize, at: &Rational| if k == 0 { int(1) } else { l.alpha_polynomial(k).unwrap().evaluate(at) };
    match mv.kind {
        EdgeKind::B => -(eval(mv.row + 1, &x) * eval(mv.row - 1, &(&x - int(1)))),
        EdgeKind::C => -(eval(mv.row + 1, &(&x + int(1))) * eval(mv.row - 1, &x)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn trees_give_gauge_equivalent_modules(root in generic_root(), seed in any::<u64>()) {
        let w = build_window(&root, 2).unwrap();
        let a = solve_module(&w, SpanningTree::BreadthFirst).unwrap();
        let b = solve_module(&w, SpanningTree::Random(seed)).unwrap();
        prop_assert!(b.residuals(&w).iter().all(Zero::is_zero));
        prop_assert!(gauge_equivalent(&w, &a, &b).unwrap());
        for word in random_cycles(&w, 0, 10, 8, seed) {
            prop_assert_eq!(a.cycle_product(&w, 0, &word.moves).unwrap(), b.cycle_product(&w, 0, &word.moves).unwrap());
        }
    }

    #[test]
    fn reduction_matches_module(root in generic_root(), seed in any::<u64>()) {
        let w = build_window(&root, 2).unwrap();
        let rep = solve_module(&w, SpanningTree::DepthFirst).unwrap();
        for word in random_cycles(&w, 0, 20, 8, seed) {
            prop_assert_eq!(reduce_cycle(&w, &word).unwrap(), rep.cycle_product(&w, 0, &word.moves).unwrap());
        }
    }

    #[test]
    fn two_step_cycles_give_the_character_scalars(root in generic_root()) {
        let w = build_window(&root, 1).unwrap();
        for mv in w.moves() {
            let word = PathWord::new(0, vec![mv, mv.inverse()]);
            prop_assert_eq!(reduce_cycle(&w, &word).unwrap(), round_trip_scalar(&root, mv));
        }
    }

    #[test]
    fn windows_grow_monotonically(root in generic_root(), r in 0u32..=2) {
        let small = build_window(&root, r).unwrap();
        let big = build_window(&root, r + 1).unwrap();
        let lift = |v: usize| big.vertex_at(&small.vertices()[v].offset).unwrap();
        let edge_key = |w: &drinfeld_core::QuiverWindow, e: usize, map: &dyn Fn(usize) -> usize| {
            let edge = &w.edges()[e];
            (map(edge.source), edge.as_move())
        };
        let id = |v: usize| v;
        let big_keys: BTreeSet<String> = big
            .relation_instances()
            .iter()
            .map(|c| constraint_key(c, &|e| edge_key(&big, e, &id)))
            .collect();
        for c in small.relation_instances() {
            prop_assert!(big_keys.contains(&constraint_key(&c, &|e| edge_key(&small, e, &lift))));
        }
    }
}

fn constraint_key(c: &Constraint, edge: &dyn Fn(usize) -> (usize, Move)) -> String {
    match c {
        Constraint::Product { first, second, scalar, .. } => format!("p{:?}{:?}{scalar}", edge(*first), edge(*second)),
        Constraint::Square { left, right, .. } => {
            format!("s{:?}{:?}{:?}{:?}", edge(left[0]), edge(left[1]), edge(right[0]), edge(right[1]))
        }
        Constraint::Loop { vertex, index, value } => format!("l{vertex}.{index}.{value}"),
    }
}

#[test]
fn one_singular_shape_matches_enumeration() {
    let root = Tableau::new(vec![vec![int(0)], vec![rat(1, 2), rat(-1, 2)], vec![int(1), int(0), int(-1)]]).unwrap();
    for r in 0..=4i64 {
        let w = build_window(&root, r as u32).unwrap();
        let mut count = 0;
        for s11 in -r..=r {
            for s21 in -r..=r {
                for s22 in -r..=r {
                    // row 2 keeps its entries in decreasing order
                    if s11.abs() + s21.abs() + s22.abs() <= r && 1 + s21 - s22 > 0 {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(w.vertices().len(), count, "radius {r}");
        for v in w.vertices() {
            let row = v.representative.row(2);
            assert!(row[0] > row[1]);
            assert!(!v.representative.is_critical());
        }
    }
}
