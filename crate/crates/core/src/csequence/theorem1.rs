use alloc::format;
use alloc::vec::Vec;

use crate::arith::{QLaurent, QRatFunc};
use crate::ballot::BallotCache;
use crate::error::{Error, Result};
use crate::qcore::{from_qbinom_basis, q_factorial, q_int, QBinomExpansion, XPoly};

fn coeff_main<C: BallotCache + ?Sized>(n: u32, j: u32, cache: &mut C) -> QLaurent {
    let (n64, j64) = (n as i64, j as i64);
    let e = j64 * n64 + (n64 - j64) * (n64 + j64 + 1) / 2;
    cache.qballot(n + j, n - j).subst_q_inverse().shift(e)
}

/// q-binomial coefficients of `C_{n+1}(x|q)`:
/// entry `j` is `f(n+j, n-j | 1/q) q^{jn + (n-j)(n+j+1)/2}`.
pub fn theorem1_expansion<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> QBinomExpansion {
    QBinomExpansion::new((0..=n).map(|j| QRatFunc::from_laurent(coeff_main(n, j, cache))).collect())
}

/// `C_{n+1}(x|q)` from its q-binomial expansion.
pub fn c_theorem1<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> XPoly {
    from_qbinom_basis(&theorem1_expansion(n, cache))
}

/// `C_n(qx+1|q)` for `n >= 1`, from
/// `sum_j f(n+j, n-1-j | 1/q) q^{jn + n(n+1)/2 - (j+1)(j+2)/2} {x choose j}_q`.
pub fn c_shifted_theorem1<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> XPoly {
    assert!(n >= 1, "C_0 is not part of the family");
    let n64 = n as i64;
    let coeffs = (0..n)
        .map(|j| {
            let j64 = j as i64;
            let e = j64 * n64 + n64 * (n64 + 1) / 2 - (j64 + 1) * (j64 + 2) / 2;
            QRatFunc::from_laurent(cache.qballot(n + j, n - 1 - j).subst_q_inverse().shift(e))
        })
        .collect();
    from_qbinom_basis(&QBinomExpansion::new(coeffs))
}

/// Whether each coefficient of [`theorem1_expansion`] lies in `N[q]`.
pub fn theorem1_coeffs_in_nq<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> Vec<bool> {
    (0..=n)
        .map(|j| {
            let c = coeff_main(n, j, cache);
            c.is_polynomial() && c.terms().all(|(_, v)| v.is_integer() && v > num_traits::Zero::zero())
        })
        .collect()
}

/// `q^{kn + n(n+1)/2} f(k+n, n | 1/q)`.
pub fn prop1_value<C: BallotCache + ?Sized>(n: u32, k: u32, cache: &mut C) -> QLaurent {
    let (n64, k64) = (n as i64, k as i64);
    cache.qballot(k + n, n).subst_q_inverse().shift(k64 * n64 + n64 * (n64 + 1) / 2)
}

/// The value of `C_{n+1}` at `x = [k]_q`, checked against `c_next`, which
/// must be `C_{n+1}(x|q)`.
pub fn c_eval_qint<C: BallotCache + ?Sized>(n: u32, k: u32, c_next: &XPoly, cache: &mut C) -> Result<QLaurent> {
    let v = prop1_value(n, k, cache);
    let at = c_next.eval(&QRatFunc::from_laurent(q_int(k as i64)));
    if at != QRatFunc::from_laurent(v.clone()) {
        return Err(Error::Inconsistent(format!("C_{}([{k}]_q) = {at}, expected {v}", n + 1)));
    }
    Ok(v)
}

/// Leading coefficient of `C_{n+1}`: `q^{n^2} / [n]_q!`.
pub fn expected_leading_coeff(n: u32) -> QRatFunc {
    let n64 = n as i64;
    QRatFunc::new(QLaurent::monomial_int(1, n64 * n64), q_factorial(n)).expect("[n]_q! is nonzero")
}
