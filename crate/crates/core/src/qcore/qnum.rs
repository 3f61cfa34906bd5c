use num_bigint::BigInt;
use num_traits::One;

use crate::arith::QLaurent;

/// `[n]_q = 1 + q + ... + q^{n-1}`, extended to negative `n` by
/// `[-n]_q = -q^{-n} [n]_q`.
pub fn q_int(n: i64) -> QLaurent {
    if n >= 0 {
        QLaurent::from_int_coeffs(0, alloc::vec![BigInt::one(); n as usize])
    } else {
        -q_int(-n).shift(n)
    }
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> QLaurent {
    (1..=n as i64).fold(QLaurent::one(), |acc, k| &acc * &q_int(k))
}

/// `(a; q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1})`.
pub fn q_pochhammer(a: &QLaurent, n: u32) -> QLaurent {
    let one = QLaurent::one();
    (0..n as i64).fold(QLaurent::one(), |acc, i| &acc * &(&one - &a.shift(i)))
}

/// Gaussian binomial `(q;q)_n / ((q;q)_k (q;q)_{n-k})`, zero outside `0..=n`.
///
/// Built as `prod_{i=1}^{k} (1 - q^{n-k+i}) / (1 - q^i)`; every partial
/// product is itself a Gaussian binomial, so each division is exact.
pub fn gauss_binom(n: i64, k: i64) -> QLaurent {
    if n < 0 || k < 0 || k > n {
        return QLaurent::zero();
    }
    let k = k.min(n - k);
    let one = QLaurent::one();
    let mut acc = QLaurent::one();
    for i in 1..=k {
        acc = &acc * &(&one - &QLaurent::monomial_int(1, n - k + i));
        acc = acc
            .div_exact(&(&one - &QLaurent::monomial_int(1, i)))
            .expect("partial Gaussian binomial products are polynomials");
    }
    acc
}

/// Ordinary binomial coefficient, zero outside `0..=n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
