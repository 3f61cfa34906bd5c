//! The `q = 1` specializations, over plain rationals.

use num_bigint::BigInt;

use crate::arith::{BigRat, QRatFunc};
use crate::qcore::{binomial, XPoly};
use crate::report::CheckResult;

fn lin(c: i64) -> XPoly {
    XPoly::linear(QRatFunc::from_int(c), QRatFunc::one())
}

fn scalar(num: BigInt, den: BigInt) -> QRatFunc {
    QRatFunc::constant(BigRat::new(num, den))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// `(x + 1) (x + n + 2)_{n-1} / n!`, which is `C_{n+1}(x|1)`.
pub fn c_q1(n: u32) -> XPoly {
    if n == 0 {
        return XPoly::one();
    }
    let n64 = n as i64;
    let prod = (n64 + 2..=2 * n64).fold(lin(1), |acc, i| &acc * &lin(i));
    prod.scale(&scalar(1.into(), factorial(n)))
}

/// `(x + 1) / (x + 1 + n) * binom(x + 2n, n)` at a nonnegative integer.
pub fn c_q1_binomial_at(n: u32, x: u32) -> BigRat {
    let (n, x) = (n as i64, x as i64);
    BigRat::new(BigInt::from(x + 1), BigInt::from(x + 1 + n)) * binomial(x + 2 * n, n)
}

/// `binom(x, j)` as a polynomial in `x`.
fn binom_x(j: u32) -> XPoly {
    let prod = (0..j as i64).fold(XPoly::one(), |acc, i| &acc * &lin(-i));
    prod.scale(&scalar(1.into(), factorial(j)))
}

/// `(x+1)/(x+n+1) binom(x+2n, n) = sum_j (2j+1)/(n+j+1) binom(2n, n-j) binom(x, j)`.
pub fn crossing_identity_q1(n: u32) -> CheckResult {
    let lhs = c_q1(n);
    let n64 = n as i64;
    let rhs = (0..=n).fold(XPoly::zero(), |acc, j| {
        let j64 = j as i64;
        let c = scalar(BigInt::from(2 * j64 + 1) * binomial(2 * n64, n64 - j64), BigInt::from(n64 + j64 + 1));
        &acc + &binom_x(j).scale(&c)
    });
    CheckResult::compare("crossing-q1", n, None, &lhs, &rhs)
}

/// `(x+2)/(x+n+1) binom(x+2n-1, n-1) = sum_j (2j+2)/(n+j+1) binom(2n-1, n-j-1) binom(x, j)`, `n >= 1`.
pub fn shifted_crossing_identity_q1(n: u32) -> CheckResult {
    assert!(n >= 1, "shifted identity needs n >= 1");
    let n64 = n as i64;
    // the factor x + n + 1 cancels against the top of the binomial once n >= 2
    let lhs = if n == 1 {
        XPoly::one()
    } else {
        let prod = (n64 + 2..=2 * n64 - 1).fold(lin(2), |acc, i| &acc * &lin(i));
        prod.scale(&scalar(1.into(), factorial(n - 1)))
    };
    let rhs = (0..n).fold(XPoly::zero(), |acc, j| {
        let j64 = j as i64;
        let c = scalar(BigInt::from(2 * j64 + 2) * binomial(2 * n64 - 1, n64 - j64 - 1), BigInt::from(n64 + j64 + 1));
        &acc + &binom_x(j).scale(&c)
    });
    CheckResult::compare("crossing-shifted-q1", n, None, &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn small_closed_forms() {
        assert_eq!(c_q1(0), XPoly::one());
        assert_eq!(c_q1(1), lin(1));
        // (x + 1)(x + 4) / 2
        assert_eq!(c_q1(2), (&lin(1) * &lin(4)).scale(&QRatFunc::constant(rat(1, 2))));
        assert_eq!(c_q1(3).eval_numeric(&rat(1, 1), &rat(1, 1)).unwrap(), rat(14, 1));
    }

    #[test]
    fn product_and_binomial_forms_agree() {
        for n in 0..=10 {
            for x in 0..=12 {
                let v = c_q1(n).eval_numeric(&rat(1, 1), &rat(x as i64, 1)).unwrap();
                assert_eq!(v, c_q1_binomial_at(n, x), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn crossing_identities() {
        for n in 0..=10 {
            assert!(crossing_identity_q1(n).pass, "n={n}");
            if n >= 1 {
                assert!(shifted_crossing_identity_q1(n).pass, "n={n}");
            }
        }
    }
}
