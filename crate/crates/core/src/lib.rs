//! Spectral connectivity certificates for regular multigraphs.
//!
//! The second-largest adjacency eigenvalue of a `d`-regular multigraph
//! controls how hard the graph is to disconnect. This crate turns that
//! observation into checkable artifacts:
//!
//! * [`graph`] — dense multigraph representation, `.mg` I/O, canonical
//!   forms, extremal families, and a configuration-model sampler.
//! * [`spectral`] — a Jacobi eigensolver, quotient matrices over exact
//!   rationals, interlacing checks, and exact determinant signs.
//! * [`connectivity`] — exact `kappa` / `kappa'`, cut-edge structure, the
//!   Cheeger constant, and independent brute-force oracles.
//! * [`bounds`] — every implemented eigenvalue bound as an evaluator, the
//!   exact case analysis behind the `rho(d, n)` threshold, and the
//!   per-graph [`bounds::Certificate`] engine.
//! * [`enumerate`] — isomorph-free generation of the constrained cubic
//!   multigraph families used to verify the eigenvalue claims by brute
//!   force.
//!
//! All randomised entry points take explicit seeds and every operation is
//! a pure function, so results are reproducible byte for byte.

pub mod bounds;
pub mod connectivity;
pub mod enumerate;
pub mod graph;
pub mod spectral;
