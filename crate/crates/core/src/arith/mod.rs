//! Exact coefficient arithmetic.

mod gcd;
mod laurent;
mod ratfunc;
pub(crate) mod zpoly;

pub use gcd::{gcd_euclid, gcd_modular};
pub use laurent::QLaurent;
pub use ratfunc::QRatFunc;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type BigRat = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(num.into(), den.into())
}
