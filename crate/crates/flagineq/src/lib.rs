//! Exact verification of polynomial inequalities on face numbers of flag
//! simplicial complexes.
//!
//! The f-vector of any flag complex satisfies an infinite family of
//! inequalities indexed by `N >= 1`: the Möbius-weighted alternating sum of
//! Newton power sums of the weights `alpha_n = sum_i f_i C(n-1, i)` is
//! non-negative, because it is `N` times the dimension of a graded component
//! of a free algebra. This crate evaluates that family in exact rational
//! arithmetic and cross-checks every value by three independent routes:
//! Newton's identities on the alpha values, Möbius inversion on the
//! reciprocal power series `Q(t)`, and factor-by-factor peeling of `Q(t)` as
//! an infinite product.
//!
//! - [`series`]: truncated formal power series over exact rationals;
//! - [`symfun`]: numeric Newton's identities, Möbius function, binomials;
//! - [`graph`] / [`complex`]: graphs, clique counting, flagness tests;
//! - [`engine`]: the alpha sequence, `D(t)`, `Q(t)`, the three `v` routes,
//!   and the inequality verdicts;
//! - [`harness`]: exhaustive, random, and family corpora with deterministic
//!   parallel aggregation;
//! - [`report`]: serializable report schemas shared with the CLI.

// parity tests read better as `n % 2 == 0`
#![allow(clippy::manual_is_multiple_of)]

pub mod complex;
pub mod engine;
pub mod fvector;
pub mod graph;
pub mod harness;
pub mod report;
pub mod series;
pub mod symfun;

pub use complex::Complex;
pub use engine::{check_inequalities, InequalityReport};
pub use fvector::FVector;
pub use graph::Graph;
pub use series::TruncatedSeries;
