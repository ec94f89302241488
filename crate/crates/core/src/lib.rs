//! I-graphs `I(n, j, k)` and generalised Petersen graphs `P(n, k) = I(n, 1, k)`.
//!
//! * [`numtheory`]: factor sieve and the multiplicative functions the counts need.
//! * [`graph`]: explicit construction, gcd classification, BFS components, export.
//! * [`isomorphism`]: backtracking isomorphism test and brute-force class partitions.
//! * [`census`]: closed-form class counts and exact tuple counts with partial sums.
//! * [`analytic`]: zeta values, limit constants, and finite-`N` density reports.

pub mod analytic;
pub mod census;
pub mod graph;
pub mod isomorphism;
pub mod numtheory;

pub use graph::{build_igraph, Convention, Graph, IGraphSpec};
pub use numtheory::FactorSieve;
