//! Exact-arithmetic toolkit for graded Betti tables.
//!
//! Everything here works over the rationals with arbitrary precision; there
//! is no floating point anywhere. The crate provides:
//!
//! - [`diagram`]: Betti tables, degree sequences, and the pure diagrams
//!   `pi(d)` / `pi_prime(d)`.
//! - [`hilbert`]: Laurent polynomials and Hilbert series, conversions between
//!   Hilbert series and Betti tables, codimension and multiplicity extraction.
//! - [`hk`]: Herzog-Kuhl equation checkers, the four-way pure-module
//!   equivalence report, multiplicity of pure modules, degree-sequence
//!   classifiers, and the special pure-table constructors.
//! - [`decomposition`]: greedy Boij-Soderberg decomposition into positive
//!   rational combinations of pure diagrams.
//! - [`oracle`]: a brute-force ground-truth engine that computes true graded
//!   Betti numbers of small cyclic quotients via Koszul-complex homology with
//!   exact linear algebra.
//! - [`parse`]: a small expression parser for homogeneous polynomials.

pub mod decomposition;
pub mod diagram;
mod error;
pub mod hilbert;
pub mod hk;
mod linalg;
pub mod oracle;
pub mod parse;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
