use alloc::vec::Vec;

use super::q_int;
use super::XPoly;
use crate::arith::{QLaurent, QRatFunc};
use crate::error::Result;

/// `f(a x + b)` by Horner composition.
pub fn subst_affine(f: &XPoly, a: &QRatFunc, b: &QRatFunc) -> XPoly {
    let inner = XPoly::linear(b.clone(), a.clone());
    let mut acc = XPoly::zero();
    for c in f.coeffs().iter().rev() {
        acc = &(&acc * &inner) + &XPoly::constant(c.clone());
    }
    acc
}

/// Hahn operator `(f(1 + q x) - f(x)) / (1 + (q - 1) x)`.
///
/// The division is always exact for polynomial `f`; a remainder means an
/// arithmetic bug and is reported as [`crate::Error::Inconsistent`].
pub fn hahn_delta(f: &XPoly) -> Result<XPoly> {
    if f.degree().is_none_or(|d| d == 0) {
        return Ok(XPoly::zero());
    }
    let shifted = subst_affine(f, &QRatFunc::q(), &QRatFunc::one());
    let diff = &shifted - f;
    let q_minus_one = QRatFunc::from_laurent(QLaurent::from_i64s(0, &[-1, 1]));
    diff.div_linear_exact(&QRatFunc::one(), &q_minus_one)
}

/// q-derivative `(f(q x) - f(x)) / ((q - 1) x)`, via the monomial rule
/// `D_q x^n = [n]_q x^{n-1}`.
pub fn q_deriv(f: &XPoly) -> XPoly {
    let coeffs: Vec<QRatFunc> = f
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.mul_laurent(&q_int(i as i64)))
        .collect();
    XPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn lp(low: i64, cs: &[i64]) -> QRatFunc {
        QRatFunc::from_laurent(QLaurent::from_i64s(low, cs))
    }

    #[test]
    fn hahn_of_x_squared() {
        // ((q^2 - 1) x^2 + 2 q x + 1) / (1 + (q - 1) x) = (1 + q) x + 1
        let x2 = XPoly::from_coeffs(vec![QRatFunc::zero(), QRatFunc::zero(), QRatFunc::one()]);
        assert_eq!(hahn_delta(&x2).unwrap(), XPoly::linear(QRatFunc::one(), lp(0, &[1, 1])));
        assert_eq!(hahn_delta(&XPoly::one()).unwrap(), XPoly::zero());
    }

    #[test]
    fn q_derivative_monomials() {
        let x2 = XPoly::from_coeffs(vec![QRatFunc::zero(), QRatFunc::zero(), QRatFunc::one()]);
        assert_eq!(q_deriv(&x2), XPoly::linear(QRatFunc::zero(), lp(0, &[1, 1])));
        assert_eq!(q_deriv(&XPoly::constant(QRatFunc::from_int(7))), XPoly::zero());
    }

    #[test]
    fn q_derivative_matches_definition() {
        let f = XPoly::from_coeffs(vec![lp(0, &[3]), lp(-1, &[1, 2]), lp(2, &[-1]), lp(0, &[0, 0, 5])]);
        let num = &subst_affine(&f, &QRatFunc::q(), &QRatFunc::zero()) - &f;
        // divide by (q - 1) x: drop the (zero) constant term, then scale
        assert!(num.coeff(0).is_zero());
        let q_minus_one = lp(0, &[-1, 1]);
        let by_def = XPoly::from_coeffs(num.coeffs()[1..].to_vec()).map_coeffs(|c| c / &q_minus_one);
        assert_eq!(q_deriv(&f), by_def);
    }

    #[test]
    fn affine_substitution() {
        let x = XPoly::x();
        let a = lp(2, &[1]);
        let b = lp(0, &[1, 1]);
        assert_eq!(subst_affine(&x, &a, &b), XPoly::linear(b.clone(), a.clone()));
        // C_2(qx + 1) = (1 + q) + q^2 x
        let c2 = XPoly::linear(QRatFunc::one(), QRatFunc::q());
        assert_eq!(
            subst_affine(&c2, &QRatFunc::q(), &QRatFunc::one()),
            XPoly::linear(lp(0, &[1, 1]), lp(2, &[1]))
        );
        assert_eq!(subst_affine(&c2, &QRatFunc::one(), &QRatFunc::zero()), c2);
    }
}
