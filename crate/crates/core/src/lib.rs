//! Exact computation of degenerate special polynomials in the formal symbols
//! `x` and `λ`: degenerate falling factorials and binomials, degenerate
//! Stirling numbers of the second kind, higher-order degenerate Bernoulli
//! polynomials and degenerate Bernstein polynomials, together with a
//! registry that checks the identities relating them.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bernoulli;
pub mod bernstein;
pub mod bipoly;
pub mod combinatorics;
pub mod rational;
pub mod scalar;
pub mod series;
pub mod verify;

pub use bipoly::BiPoly;
pub use rational::{parse_rational, Rational};
pub use scalar::Scalar;
pub use series::TruncSeries;
