//! Cumulants and Gaussian fluctuations of polynomial linear statistics of
//! orthogonal/biorthogonal ensembles, computed through the band structure of
//! their recurrence matrices.
//!
//! The crate has two arithmetic modes sharing one generic code path:
//! exact rationals ([`num_rational::BigRational`]) for the combinatorial
//! identities and stabilization checks, and `f64` for quadrature, asymptotics,
//! and everything statistical. The [`scalar::Coeff`] trait is the bridge.
//!
//! Module map:
//!
//! * [`band`] — band matrices (finite windows or index generators), principal
//!   blocks, polynomial functional calculus `F(J)` by exact windowed
//!   multiplication, growth checks.
//! * [`combinatorics`] — the composition calculus (checkpoint sets, signed
//!   multinomial weights, the checkpoint-maximum functional `G_n`) and exact
//!   verifiers for the classical identities it rests on: the main
//!   combinatorial lemma, Dyson–Hunt–Kac, Rudnick–Sarnak,
//!   Bohnenblust–Spitzer, the composition Möbius identity, and the finite
//!   -difference binomial lemma.
//! * [`cumulants`] — cumulants of polynomial linear statistics by constrained
//!   lattice-path enumeration, the trace-formula oracle, and the bi-infinite
//!   limit functional `varpi`.
//! * [`laurent`] — Laurent polynomial symbols, composition `F(s)`, and four
//!   cross-checked limiting-variance formulas.
//! * [`right_limit`] — classical Jacobi matrix families, window extraction
//!   around row `N`, right-limit detection, Laurent (diagonal-constancy)
//!   testing, and a discretized Stieltjes procedure for general weights.
//! * [`ginibre`] — closed-form recurrence data for square singular values of
//!   products of rectangular complex Ginibre matrices and their limiting
//!   symbol and CLT variance.
//! * [`szego`] — Toeplitz determinants of exponentiated symbols, the strong
//!   Szegő limit check, and exact circular-ensemble cumulant limits.
//! * [`chebyshev`] — the binomial change of basis between monomials and
//!   scaled Chebyshev polynomials, the covariance factorization it
//!   diagonalizes, and the arcsine Gram identity.
//!
//! Everything here is pure and deterministic: no RNG, no threads, no IO.
//! The crate is `no_std`-compatible (requires `alloc`); the `std` feature
//! (default) only adds `std::error::Error` for the error type.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod band;
pub mod chebyshev;
pub mod combinatorics;
pub mod cumulants;
pub mod ginibre;
pub mod laurent;
pub mod poly;
pub mod right_limit;
pub mod scalar;
pub mod szego;

mod error;
mod mathx;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
