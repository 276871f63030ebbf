//! Exact combinatorics for graceful labelings of functional directed graphs.
//!
//! A function `f : Z_n -> Z_n` is drawn as the digraph `G_f` with one directed
//! edge `i -> f(i)` per vertex (a fixed point contributes a loop). Relabeling
//! the vertices by a permutation `s` induces the subtractive edge labels
//! `|s(f(i)) - s(i)|`; the labeling is *graceful* when those labels are
//! exactly `{0, 1, ..., n-1}`.
//!
//! The crate provides, all in exact arithmetic:
//!
//! * [`endograph`] — endofunctions, iteration, cycle structure, signed
//!   incidence matrices;
//! * [`monoid`] — permutations with lexicographic rank/unrank, enumeration of
//!   functional trees and forests, composition-closure checks and a census of
//!   small submonoids of `Z_n^{Z_n}`;
//! * [`labeling`] — induced edge labels, backtracking search for graceful
//!   labelings and for prescribed label sequences, automorphism groups,
//!   graceful-relabeling enumeration, and the min/max distinct-label
//!   statistics;
//! * [`certificate`] — big-integer evaluation of Vandermonde-style certificate
//!   polynomials at the label-difference points, the center-sums identity,
//!   Eisenstein norms, and graceful-expansion extraction/verification;
//! * [`verify`] — exhaustive desk-scale verification suites that report any
//!   counterexample with full reproduction data.
//!
//! Everything is deterministic: enumeration orders are canonical, search
//! tie-breaking is fixed, and parallel sweeps aggregate in instance order.

#![forbid(unsafe_code)]

pub mod certificate;
pub mod endograph;
pub mod labeling;
pub mod monoid;
pub mod verify;

mod error;

pub use error::{Error, Result};

/// Exact signed integer of unbounded magnitude; every certificate value is one.
pub type BigValue = num_bigint::BigInt;
