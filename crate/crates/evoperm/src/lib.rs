//! Exact analysis of evolution algebras defined by two permutations.
//!
//! An algebra `E` is given by permutations `pi`, `tau` of `{1..n}` and
//! coefficient vectors, with basis products `e_i * e_i = a_pi[i] *
//! e_{pi(i)} + a_tau[i] * e_{tau(i)}` and `e_i * e_j = 0` otherwise.
//! The crate computes, with exact rational arithmetic throughout:
//!
//! - all absolute nilpotent elements (`x^2 = 0`), classified cycle by
//!   cycle of the map `k -> tau^{-1}(pi(k))`, with closed-form
//!   magnitudes and four determinant/sign uniqueness criteria;
//! - weight functions (characters supported on one coordinate) and
//!   hence whether the algebra is baric;
//! - idempotent elements (`x^2 = x`): the trivial and uniform
//!   particular solutions for general `n`, and the complete real
//!   classification for `n = 2` through an exact cubic discriminant;
//! - direct-sum decompositions along matching permutation cycles and
//!   canonical forms under basis relabeling, with isomorphism checks;
//! - independent brute-force oracles (exact elimination plus cone
//!   feasibility, numeric companion-matrix roots) that cross-check all
//!   of the above.
//!
//! The `evoperm` binary exposes the analyses on JSON descriptions of
//! algebras; see the crate README.

pub mod algebra;
pub mod baric;
pub mod cli;
pub mod exactnum;
pub mod idempotent;
pub mod nilpotent;
pub mod oracle;
pub mod perm;
pub mod structure;

pub use algebra::{Element, PermEvolutionAlgebra};
pub use exactnum::{Rational, RationalMatrix, SqrtRational};
pub use perm::{CycleDecomposition, Permutation};
