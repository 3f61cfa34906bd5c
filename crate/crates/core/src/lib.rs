//! Exact computer algebra for Carlitz–Riordan q-ballot numbers, q-Catalan
//! numbers and the interpolating polynomial family `C_n(x|q)`.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals,
//! polynomials in `q` are Laurent polynomials, and coefficients of
//! polynomials in `x` live in the rational function field `Q(q)`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! the thread-safe memo cache live in the `qballot` crate.
//!
//! Module map:
//! - [`arith`]: [`BigRat`], [`QLaurent`], [`QRatFunc`] and polynomial gcd.
//! - [`qcore`]: q-integers, Gaussian binomials, [`XPoly`], the Hahn and
//!   q-derivative operators, basis conversions, q-Stirling numbers and
//!   Newton interpolation.
//! - [`ballot`]: ballot and q-ballot numbers, lattice paths, q-Catalan
//!   numbers and the identity checks built on them.
//! - [`csequence`]: the family `C_n(x|q)` by three independent constructions.
//! - [`analysis`]: numerators, Newton polytopes and the named check suites.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod arith;
pub mod ballot;
pub mod csequence;
mod error;
pub mod qcore;
pub mod report;

pub use arith::{BigRat, QLaurent, QRatFunc};
pub use ballot::{BallotCache, BallotTable, LatticePath};
pub use csequence::{CFamily, Method};
pub use error::{Error, Result};
pub use qcore::{QBinomExpansion, XPoly};
