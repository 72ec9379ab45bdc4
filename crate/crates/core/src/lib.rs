//! Spectral bounds for k-uniform hypergraphs.
//!
//! The library has four parts:
//!
//! - [`hypergraph`]: the [`Hypergraph`] type (validation, parsing, canonical
//!   serialization, generators) together with degree sequences and connected
//!   components.
//! - [`exact`]: arbitrary-precision binomial and rational arithmetic for the
//!   coefficients that appear in the degree bounds, plus exact checkers for
//!   two combinatorial identities used to derive them.
//! - [`bounds`]: the per-index upper bounds `phi_s` (adjacency) and `psi_s`
//!   (signless Laplacian) on the tensor spectral radius, their minima over
//!   `s`, and the minimum-degree/edge-count corollary forms.
//! - [`spectral`]: matrix-free application of the adjacency and signless
//!   Laplacian tensors, Collatz-Wielandt bracketing, shifted power iteration
//!   for the spectral radius, and an independent dense-matrix oracle for the
//!   graph case `k = 2`.
//!
//! All bound coefficients are kept as exact rationals until a single final
//! square root; spectral radii are bracketed between row-sum ratios of the
//! diagonally rescaled tensor, so every reported estimate carries a rigorous
//! lower and upper enclosure.

pub mod bounds;
pub mod exact;
pub mod hypergraph;
pub mod spectral;

pub use bounds::{BoundKind, BoundReport, CorollaryMode};
pub use hypergraph::{ComponentPartition, DegreeSequence, GenerateError, Hypergraph, HypergraphError};
pub use spectral::{Operator, SpectralConfig, SpectralEstimate};
