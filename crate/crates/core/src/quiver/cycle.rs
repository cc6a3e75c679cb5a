//! Words in the window arrows and their reduction to scalars.
//!
//! A cycle is rewritten with the commutation squares until two mutually inverse arrows
//! at the same position are adjacent; that pair is replaced by its return scalar. Every
//! cancellation shortens the word by two.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{return_scalar, Move, QuiverError, QuiverWindow};
use crate::rational::Rational;
use crate::tableau::Tableau;

/// Arrows applied in order (first element first) starting at a window vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWord {
    pub start: usize,
    pub moves: Vec<Move>,
}

/// A maximal block of one repeated arrow, e.g. `c_m` applied `length` times in a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub mv: Move,
    pub length: usize,
}

impl PathWord {
    pub fn new(start: usize, moves: Vec<Move>) -> Self {
        Self { start, moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn runs(&self) -> Vec<Run> {
        let mut out: Vec<Run> = Vec::new();
        for mv in &self.moves {
            match out.last_mut() {
                Some(run) if run.mv == *mv => run.length += 1,
                _ => out.push(Run { mv: *mv, length: 1 }),
            }
        }
        out
    }

    /// Edge ids traversed inside `window`.
    pub fn edges(&self, window: &QuiverWindow) -> Result<Vec<usize>, QuiverError> {
        if self.start >= window.vertices().len() {
            return Err(QuiverError::UnknownVertex(self.start));
        }
        let mut at = self.start;
        let mut out = Vec::with_capacity(self.moves.len());
        for (step, mv) in self.moves.iter().enumerate() {
            let e = window.edge_from(at, *mv).ok_or(QuiverError::LeavesWindow { step })?;
            out.push(e);
            at = window.edges()[e].target;
        }
        Ok(out)
    }

    /// Vertex reached after the last arrow.
    pub fn end(&self, window: &QuiverWindow) -> Result<usize, QuiverError> {
        let edges = self.edges(window)?;
        Ok(edges.last().map_or(self.start, |&e| window.edges()[e].target))
    }
}

fn apply(t: &Tableau, mv: Move) -> Tableau {
    t.lattice_shift(mv.row, mv.pos, mv.kind.direction()).expect("moves stay below the top row")
}

/// Tableaux before each arrow of `moves`.
fn stations(start: &Tableau, moves: &[Move]) -> Vec<Tableau> {
    let mut out = Vec::with_capacity(moves.len());
    let mut t = start.clone();
    for mv in moves {
        out.push(t.clone());
        t = apply(&t, *mv);
    }
    out
}

fn admissible(root: &Tableau, t: &Tableau) -> bool {
    !t.is_critical() && root.same_nc_component(t) == Ok(true)
}

/// Swaps arrows `k` and `k + 1` when a commutation square through an admissible corner allows it.
fn try_swap(root: &Tableau, start: &Tableau, moves: &mut [Move], k: usize) -> bool {
    let (p, q) = (moves[k], moves[k + 1]);
    if !p.commutes_with(&q) {
        return false;
    }
    let corner = apply(&stations(start, &moves[..k + 1])[k], q);
    if !admissible(root, &corner) {
        return false;
    }
    moves.swap(k, k + 1);
    true
}

/// Brings `moves[j]` and `moves[k]` together: arrows of the other kind go left of the pair,
/// arrows of the same kind as `moves[j]` go right.
fn gather(root: &Tableau, start: &Tableau, moves: &mut [Move], mut j: usize, mut k: usize) -> bool {
    let kind = moves[j].kind;
    while k > j + 1 {
        if moves[j + 1].kind != kind {
            if !try_swap(root, start, moves, j) {
                return false;
            }
            j += 1;
        } else if moves[k - 1].kind == kind {
            if !try_swap(root, start, moves, k - 1) {
                return false;
            }
            k -= 1;
        } else {
            let Some(t) = (j + 1..k - 1).find(|&t| moves[t].kind == kind && moves[t + 1].kind != kind) else {
                return false;
            };
            if !try_swap(root, start, moves, t) {
                return false;
            }
        }
    }
    true
}

/// Pairs `(j, k)` of consecutive arrows at one position with opposite kinds, nearest first.
fn partner_pairs(moves: &[Move]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for k in 0..moves.len() {
        if let Some(j) = (0..k).rev().find(|&j| moves[j].same_position(&moves[k])) {
            if moves[j].kind != moves[k].kind {
                pairs.push((j, k));
            }
        }
    }
    pairs.sort_by_key(|&(j, k)| (k - j, j));
    pairs
}

/// The scalar by which the cycle `word` acts on the one-dimensional module.
pub fn reduce_cycle(window: &QuiverWindow, word: &PathWord) -> Result<Rational, QuiverError> {
    if word.end(window)? != word.start {
        return Err(QuiverError::NotACycle);
    }
    let root = window.root();
    let start = window.vertices()[word.start].representative.clone();
    let mut moves = word.moves.clone();
    let mut scalar = Rational::one();
    let cap = 4 * moves.len() * moves.len() + 8;
    for _ in 0..cap {
        if moves.is_empty() {
            return Ok(scalar);
        }
        if let Some(k) = (0..moves.len() - 1).find(|&k| moves[k] == moves[k + 1].inverse()) {
            scalar *= return_scalar(&stations(&start, &moves[..k + 1])[k], moves[k]);
            moves.drain(k..k + 2);
            continue;
        }
        let mut progressed = false;
        for (j, k) in partner_pairs(&moves) {
            let mut trial = moves.clone();
            if gather(root, &start, &mut trial, j, k) {
                moves = trial;
                progressed = true;
                break;
            }
        }
        if !progressed {
            break;
        }
    }
    Err(QuiverError::Irreducible { remaining: moves.len() })
}

/// `count` random cycles at `vertex`, each of length at most `max_len`, staying in the window.
pub fn random_cycles(window: &QuiverWindow, vertex: usize, count: usize, max_len: usize, seed: u64) -> Vec<PathWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let distance = distances_to(window, vertex);
    (0..count).map(|_| random_cycle(window, vertex, &distance, max_len, &mut rng)).collect()
}

/// Number of arrows needed to reach `vertex` from each window vertex.
fn distances_to(window: &QuiverWindow, vertex: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; window.vertices().len()];
    dist[vertex] = 0;
    let mut queue = VecDeque::from([vertex]);
    // arrows come in opposite pairs, so distances to and from a vertex agree
    while let Some(v) = queue.pop_front() {
        for e in window.edges_from(v) {
            let t = window.edges()[e].target;
            if dist[t] == usize::MAX {
                dist[t] = dist[v] + 1;
                queue.push_back(t);
            }
        }
    }
    dist
}

fn random_cycle(window: &QuiverWindow, vertex: usize, distance: &[usize], max_len: usize, rng: &mut ChaCha8Rng) -> PathWord {
    let budget = rng.gen_range(0..=max_len);
    let mut moves = Vec::new();
    let mut at = vertex;
    // wander while there is room for the shortest way back
    while moves.len() + distance[at] < budget {
        let out: Vec<usize> =
            window.edges_from(at).filter(|&e| moves.len() + 1 + distance[window.edges()[e].target] <= max_len).collect();
        let Some(&e) = out.choose(rng) else { break };
        moves.push(window.edges()[e].as_move());
        at = window.edges()[e].target;
    }
    while at != vertex {
        let closer: Vec<usize> = window.edges_from(at).filter(|&e| distance[window.edges()[e].target] < distance[at]).collect();
        let &e = closer.choose(rng).expect("a vertex off the start has a neighbour closer to it");
        moves.push(window.edges()[e].as_move());
        at = window.edges()[e].target;
    }
    PathWord::new(vertex, moves)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub seed: u64,
    pub vertex: usize,
    pub max_len: usize,
    pub samples: Vec<(PathWord, Result<Rational, QuiverError>)>,
}

impl ProbeReport {
    /// Every sampled cycle reduced to a scalar.
    pub fn passes(&self) -> bool {
        self.samples.iter().all(|(_, r)| r.is_ok())
    }

    pub fn failures(&self) -> usize {
        self.samples.iter().filter(|(_, r)| r.is_err()).count()
    }
}

/// Reduces `samples` random cycles at `vertex`.
pub fn cyclic_dimension_probe(
    window: &QuiverWindow,
    vertex: usize,
    samples: usize,
    max_len: usize,
    seed: u64,
) -> Result<ProbeReport, QuiverError> {
    if vertex >= window.vertices().len() {
        return Err(QuiverError::UnknownVertex(vertex));
    }
    let samples = random_cycles(window, vertex, samples, max_len, seed)
        .into_iter()
        .map(|w| {
            let r = reduce_cycle(window, &w);
            (w, r)
        })
        .collect();
    Ok(ProbeReport { seed, vertex, max_len, samples })
}
