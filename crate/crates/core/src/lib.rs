//! Spectral and transport properties of a one-dimensional incommensurate
//! bilayer: two parallel tight-binding chains with lattice constants ℓ₁, ℓ₂
//! (normalized so ℓ₁ℓ₂ = 1), first-neighbor hopping inside each chain and a
//! Gaussian inter-chain coupling.
//!
//! Irrational length ratios α = ℓ₂/ℓ₁ are approximated by rational
//! supercells: p sites of chain 1 and q sites of chain 2 share one period
//! L = √(pq), and a scan over p at fixed N = p + q sweeps α. Per supercell
//! the pipeline is
//!
//! 1. [`model::assemble_supercell`] — dense periodic Hamiltonian from the
//!    block-kernel operator algebra ([`algebra`]),
//! 2. [`kubo::eigendecompose`] — full Hermitian eigendecomposition,
//! 3. [`kpm`] — Chebyshev moments, Jackson damping, node weights for the
//!    density of states and its integral,
//! 4. [`kubo`] — two-dimensional Chebyshev moments of the current-current
//!    correlation measure and the relaxation-time conductivity quadrature,
//! 5. [`scan`] — the embarrassingly parallel sweep driver with a moment
//!    cache.
//!
//! The [`algebra`] module implements the underlying C*-algebra of the
//! bilayer (block star product, adjoint, derivations, trace per unit
//! volume) as a first-class, property-tested object; the Hamiltonian
//! assembly is its finite-volume representation.

pub mod algebra;
pub mod error;
pub mod kpm;
pub mod kubo;
pub mod lattice;
pub mod model;
pub mod operator;
pub mod scan;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Complex64 = num_complex::Complex<f64>;
