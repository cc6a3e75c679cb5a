//! Exact symbolic machinery for non-critical Gelfand-Tsetlin modules of `gl_n`.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised bottom-up:
//!
//! - [`algebra`]: PBW normal forms in `U(gl_n)` with rational coefficients,
//!   commutators and the Harish-Chandra projection used as an eigenvalue oracle.
//! - [`poly`]: polynomials in one or two central variables with algebra coefficients.
//! - [`drinfeld`]: the evaluation images of the Yangian T-matrix, quantum minors,
//!   the Drinfeld generator polynomials `a_m, b_m, c_m, d_m`, the Gelfand-Tsetlin
//!   generators `c_mk`, the commutation-relation verifier and Lagrange interpolation.
//! - [`tableau`]: Gelfand-Tsetlin tableaux over `Q`, characters, singularity
//!   classification and lattice predicates.
//! - [`quiver`]: finite windows of the Drinfeld quiver, their relations, the
//!   one-dimensional module solver and the cycle reducer.
//!
//! All arithmetic is exact; there is no floating point anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod drinfeld;
pub mod poly;
pub mod quiver;
pub mod rational;
pub mod tableau;

pub use algebra::{AlgebraElement, AlgebraError, CartanPolynomial, Generator, PbwMonomial, Rewriter};
pub use drinfeld::{DrinfeldKind, DrinfeldSet, RelationFamily, RelationReport};
pub use poly::{BiPolynomial, RationalPolynomial, UPolynomial};
pub use quiver::{
    build_window, reduce_cycle, solve_module, Constraint, EdgeKind, ModuleRep, Move, PathWord, QuiverError, QuiverWindow,
    SpanningTree,
};
pub use rational::Rational;
pub use tableau::{ClassKind, Classification, GtIdeal, Tableau, TableauError};
