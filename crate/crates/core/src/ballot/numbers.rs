use num_bigint::BigInt;
use num_traits::Zero;

use super::{BallotCache, BallotTable};
use crate::arith::{BigRat, QLaurent};
use crate::error::{Error, Result};
use crate::qcore::binomial;

/// `f(n,k) = (n-k+1)/(n+1) * binom(n+k, k)`, zero for `k > n`.
pub fn ballot(n: u32, k: u32) -> BigRat {
    if k > n {
        return BigRat::zero();
    }
    BigRat::new(BigInt::from(n - k + 1), BigInt::from(n + 1)) * binomial((n + k) as i64, k as i64)
}

/// Ordinary Catalan number.
pub fn catalan(n: u32) -> BigInt {
    binomial(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

/// `f(n,k|q)` from a throwaway table.
pub fn qballot(n: u32, k: u32) -> QLaurent {
    BallotTable::new().qballot(n, k)
}

/// `C_n(q)`, computed as the row sum `sum_k f(n-1,k|q)` and as
/// `q^-n f(n,n|q)`; panics if the two disagree.
pub fn qcatalan<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> QLaurent {
    if n == 0 {
        return QLaurent::one();
    }
    let row: QLaurent = (0..n).map(|k| cache.qballot(n - 1, k)).sum();
    let diag = cache.qballot(n, n).shift(-(n as i64));
    assert_eq!(row, diag, "two q-Catalan computations disagree at n = {n}");
    row
}

/// `C~_n(q) = q^{binom(n,2)} C_n(1/q)`.
pub fn tilde_qcatalan<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> QLaurent {
    let n64 = n as i64;
    qcatalan(n, cache).subst_q_inverse().shift(n64 * (n64 - 1) / 2)
}

/// `f~(m,n|q) = q^{(m-n)n + binom(n+1,2)} f(m,n|1/q)`.
pub fn tilde_f<C: BallotCache + ?Sized>(m: u32, n: u32, cache: &mut C) -> Result<QLaurent> {
    if m < n {
        return Err(Error::InvalidTildeIndex { m, n });
    }
    let (m64, n64) = (m as i64, n as i64);
    Ok(cache.qballot(m, n).subst_q_inverse().shift((m64 - n64) * n64 + n64 * (n64 + 1) / 2))
}
