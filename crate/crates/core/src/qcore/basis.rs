//! The q-binomial basis `{x choose k}_q` and the Newton basis `p_k(x)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{hahn_delta, q_deriv, q_factorial, q_int, q_pochhammer, XPoly};
use crate::arith::{QLaurent, QRatFunc};
use crate::error::Result;

/// A polynomial written as `sum_j coeffs[j] * {x choose j}_q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QBinomExpansion {
    pub coeffs: Vec<QRatFunc>,
}

impl QBinomExpansion {
    pub fn new(mut coeffs: Vec<QRatFunc>) -> Self {
        while coeffs.last().is_some_and(QRatFunc::is_zero) {
            coeffs.pop();
        }
        QBinomExpansion { coeffs }
    }

    pub fn to_xpoly(&self) -> XPoly {
        from_qbinom_basis(self)
    }
}

impl fmt::Display for QBinomExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if j == 0 {
                super::xpoly::write_coeff(f, c)?;
                continue;
            }
            if !c.is_one() {
                super::xpoly::write_coeff(f, c)?;
            }
            write!(f, "{{x choose {j}}}_q")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `{x choose k}_q = x (x - [1]_q) ... (x - [k-1]_q) / [k]_q!`.
pub fn qbinom_x(k: u32) -> XPoly {
    let mut acc = XPoly::one();
    for i in 0..k as i64 {
        acc = &acc * &XPoly::linear(QRatFunc::from_laurent(-q_int(i)), QRatFunc::one());
    }
    let fact = q_factorial(k);
    acc.try_map_coeffs(|c| c.div_laurent(&fact)).expect("[k]_q! is nonzero")
}

/// Value of `{v choose k}_q` at a point.
pub fn qbinom_at(v: &QRatFunc, k: u32) -> QRatFunc {
    let mut acc = QRatFunc::one();
    for i in 0..k as i64 {
        acc = &acc * &(v - &QRatFunc::from_laurent(q_int(i)));
    }
    acc.div_laurent(&q_factorial(k)).expect("[k]_q! is nonzero")
}

/// `p_k(x) = (-1)^k q^{-binom(k,2)} (x - 1)(x - q)...(x - q^{k-1}) / (q;q)_k`,
/// so that `p_k(q^n)` is the Gaussian binomial `[n, k]`.
pub fn newton_p(k: u32) -> XPoly {
    let mut acc = XPoly::one();
    for i in 0..k as i64 {
        acc = &acc * &XPoly::linear(QRatFunc::from_laurent(QLaurent::monomial_int(-1, i)), QRatFunc::one());
    }
    let k = k as i64;
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let pref = QLaurent::monomial_int(sign, -(k * (k - 1) / 2));
    let den = q_pochhammer(&QLaurent::q(), k as u32);
    let scale = QRatFunc::new(pref, den).expect("(q;q)_k is nonzero");
    acc.scale(&scale)
}

/// Coefficients in the q-binomial basis: entry `j` is `(Delta_q^j f)(0)`.
pub fn to_qbinom_basis(f: &XPoly) -> Result<QBinomExpansion> {
    let mut coeffs = Vec::new();
    let mut g = f.clone();
    while !g.is_zero() {
        coeffs.push(g.coeff(0));
        g = hahn_delta(&g)?;
    }
    Ok(QBinomExpansion::new(coeffs))
}

/// `sum_j e.coeffs[j] * {x choose j}_q` in the monomial basis.
pub fn from_qbinom_basis(e: &QBinomExpansion) -> XPoly {
    if e.coeffs.iter().all(QRatFunc::is_laurent) {
        from_qbinom_laurent(e)
    } else {
        from_qbinom_generic(e)
    }
}

/// Nested Horner form over `Q(q)`:
/// `c_0 + (x - [0])/[1] (c_1 + (x - [1])/[2] (c_2 + ...))`.
pub(crate) fn from_qbinom_generic(e: &QBinomExpansion) -> XPoly {
    let Some(d) = e.coeffs.len().checked_sub(1) else {
        return XPoly::zero();
    };
    let mut acc = XPoly::constant(e.coeffs[d].clone());
    for j in (0..d).rev() {
        let factor = XPoly::linear(QRatFunc::from_laurent(-q_int(j as i64)), QRatFunc::one());
        let step = q_int(j as i64 + 1);
        acc = (&acc * &factor).try_map_coeffs(|c| c.div_laurent(&step)).expect("[j]_q is nonzero");
        acc = &acc + &XPoly::constant(e.coeffs[j].clone());
    }
    acc
}

/// Same sum with Laurent coefficients, cleared to the common denominator
/// `[d]_q!` so the Horner pass runs in `Z[q, q^-1][x]` and each monomial
/// coefficient is reduced only once at the end.
fn from_qbinom_laurent(e: &QBinomExpansion) -> XPoly {
    let d = e.coeffs.len().saturating_sub(1);
    let den = q_factorial(d as u32);
    XPoly::from_coeffs(
        qbinom_numerators(e)
            .into_iter()
            .map(|c| QRatFunc::new(c, den.clone()).expect("[d]_q! is nonzero"))
            .collect(),
    )
}

/// Monomial coefficients of `[d]_q! * sum_j e.coeffs[j] {x choose j}_q`,
/// `d = len - 1`, unreduced. Every coefficient of `e` must be Laurent.
pub(crate) fn qbinom_numerators(e: &QBinomExpansion) -> Vec<QLaurent> {
    let Some(d) = e.coeffs.len().checked_sub(1) else {
        return Vec::new();
    };
    let lc = |j: usize| e.coeffs[j].as_laurent().expect("Laurent coefficient").clone();
    // weight w_j = [j+1]_q ... [d]_q
    let mut weight = QLaurent::one();
    let mut acc: Vec<QLaurent> = vec![lc(d)];
    for j in (0..d).rev() {
        weight = &weight * &q_int(j as i64 + 1);
        let root = q_int(j as i64);
        // acc <- acc * (x - [j]) + c_j * w_j
        let mut next = vec![QLaurent::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            if !root.is_zero() {
                next[i] = &next[i] - &(c * &root);
            }
        }
        next[0] = &next[0] + &(&lc(j) * &weight);
        acc = next;
    }
    acc
}

/// Coefficients in the basis `p_j(x)`: `c_j = q^{binom(j,2)} (q - 1)^j (D_q^j f)(1)`.
///
/// The sign follows from `D_q p_k = q^{1-k} / (q - 1) p_{k-1}`; with
/// `(1 - q)^j` odd coefficients come out negated.
pub fn to_p_basis(f: &XPoly) -> Vec<QRatFunc> {
    let q_minus_one = QLaurent::from_i64s(0, &[-1, 1]);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut j = 0i64;
    while !g.is_zero() {
        let v = g.eval(&QRatFunc::one());
        let pref = q_minus_one.pow(j as u32).shift(j * (j - 1) / 2);
        out.push(v.mul_laurent(&pref));
        g = q_deriv(&g);
        j += 1;
    }
    out
}

/// `sum_j c[j] * p_j(x)`.
pub fn from_p_basis(c: &[QRatFunc]) -> XPoly {
    c.iter()
        .enumerate()
        .fold(XPoly::zero(), |acc, (j, cj)| &acc + &newton_p(j as u32).scale(cj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::gauss_binom;

    fn lp(low: i64, cs: &[i64]) -> QRatFunc {
        QRatFunc::from_laurent(QLaurent::from_i64s(low, cs))
    }

    #[test]
    fn small_qbinom_polynomials() {
        assert_eq!(qbinom_x(1), XPoly::x());
        // (x^2 - x) / (1 + q)
        let inv = QRatFunc::new(QLaurent::one(), QLaurent::from_i64s(0, &[1, 1])).unwrap();
        assert_eq!(qbinom_x(2), XPoly::from_coeffs(vec![QRatFunc::zero(), -&inv, inv.clone()]));
        // at x = [3]_q: q (1 + q + q^2)
        let v = qbinom_x(2).eval(&QRatFunc::from_laurent(q_int(3)));
        assert_eq!(v, lp(1, &[1, 1, 1]));
    }

    #[test]
    fn qbinom_at_q_integers() {
        // {[n]_q choose k}_q = q^{binom(k,2)} [n, k]
        for n in 0..=8i64 {
            for k in 0..=n {
                let v = qbinom_at(&QRatFunc::from_laurent(q_int(n)), k as u32);
                let expected = gauss_binom(n, k).shift(k * (k - 1) / 2);
                assert_eq!(v, QRatFunc::from_laurent(expected), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn newton_p_small_cases() {
        assert_eq!(newton_p(0), XPoly::one());
        let v = newton_p(1).eval(&lp(2, &[1]));
        assert_eq!(v, lp(0, &[1, 1]));
        assert!(newton_p(2).eval(&QRatFunc::q()).is_zero());
    }

    #[test]
    fn basis_conversion_examples() {
        let x2 = XPoly::from_coeffs(vec![QRatFunc::zero(), QRatFunc::zero(), QRatFunc::one()]);
        let e = to_qbinom_basis(&x2).unwrap();
        assert_eq!(e.coeffs, vec![QRatFunc::zero(), QRatFunc::one(), lp(0, &[1, 1])]);
        assert_eq!(to_qbinom_basis(&XPoly::one()).unwrap().coeffs, vec![QRatFunc::one()]);
        let c2 = XPoly::linear(QRatFunc::one(), QRatFunc::q());
        assert_eq!(to_qbinom_basis(&c2).unwrap().coeffs, vec![QRatFunc::one(), QRatFunc::q()]);
        assert_eq!(from_qbinom_basis(&QBinomExpansion::new(vec![QRatFunc::one(), QRatFunc::q()])), c2);
        assert_eq!(from_qbinom_basis(&QBinomExpansion::new(vec![QRatFunc::zero(); 3])), XPoly::zero());
    }

    #[test]
    fn c3_display_in_monomial_basis() {
        let e = QBinomExpansion::new(vec![lp(0, &[1, 1]), lp(1, &[1, 1, 1]), lp(4, &[1])]);
        let p = from_qbinom_basis(&e);
        let one_plus_q = QLaurent::from_i64s(0, &[1, 1]);
        let c2 = QRatFunc::new(QLaurent::monomial_int(1, 4), one_plus_q.clone()).unwrap();
        let c1 = &lp(1, &[1, 1, 1]) - &c2;
        assert_eq!(p, XPoly::from_coeffs(vec![lp(0, &[1, 1]), c1, c2]));
        assert_eq!(from_qbinom_generic(&e), p);
    }

    #[test]
    fn generic_and_laurent_paths_agree() {
        let e = QBinomExpansion::new(vec![lp(-1, &[2, 0, 1]), lp(0, &[0, 3]), lp(2, &[1, -1, 1]), lp(0, &[7])]);
        assert_eq!(from_qbinom_laurent(&e), from_qbinom_generic(&e));
    }
}
