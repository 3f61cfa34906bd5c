use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gcd::gcd_with_cofactors;
use super::{BigRat, QLaurent};
use crate::error::{Error, Result};

/// Element of `Q(q)` in canonical reduced form `num / den`.
///
/// `den` is a primitive integer polynomial with positive leading coefficient
/// and nonzero constant term; any power of `q` and any rational scalar sits in
/// `num`. Numerator and denominator are coprime, so structural equality is
/// equality in `Q(q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRatFunc {
    num: QLaurent,
    den: QLaurent,
}

impl QRatFunc {
    pub fn zero() -> Self {
        QRatFunc { num: QLaurent::zero(), den: QLaurent::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(QLaurent::one())
    }

    pub fn q() -> Self {
        Self::from_laurent(QLaurent::q())
    }

    /// A Laurent polynomial is already reduced over the denominator 1.
    pub fn from_laurent(num: QLaurent) -> Self {
        QRatFunc { num, den: QLaurent::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(QLaurent::from(c))
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_laurent(QLaurent::constant(c))
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: QLaurent, den: QLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_one() {
            return Ok(Self::from_laurent(num));
        }
        let (cn, ln, pn) = num.primitive_decomposition();
        let (cd, ld, pd) = den.primitive_decomposition();
        let scalar = cn / cd;
        if pd.len() == 1 {
            // denominator is a monomial
            let n = QLaurent::from_int_coeffs(ln - ld, pn).scale(&scalar);
            return Ok(Self::from_laurent(n));
        }
        let (_, nbar, dbar) = gcd_with_cofactors(&pn, &pd);
        // cofactors of primitive inputs are primitive; keep the lead positive
        let flip = dbar.last().is_some_and(|c| c < &BigInt::zero());
        let sign = if flip { -BigRat::one() } else { BigRat::one() };
        let dbar: Vec<BigInt> = if flip { dbar.into_iter().map(|c| -c).collect() } else { dbar };
        let num = QLaurent::from_int_coeffs(ln - ld, nbar).scale(&(scalar * sign));
        let den = QLaurent::from_int_coeffs(0, dbar);
        Ok(QRatFunc { num, den })
    }

    pub fn numer(&self) -> &QLaurent {
        &self.num
    }

    pub fn denom(&self) -> &QLaurent {
        &self.den
    }

    pub fn into_parts(self) -> (QLaurent, QLaurent) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True if the value lies in `Q[q, q^{-1}]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&QLaurent> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        QRatFunc { num: self.num.shift(e), den: self.den.clone() }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_laurent(&self, p: &QLaurent) -> Self {
        if self.is_laurent() {
            return Self::from_laurent(&self.num * p);
        }
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    pub fn div_laurent(&self, p: &QLaurent) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if let Some(qt) = self.num.div_exact(p) {
            return Ok(QRatFunc { num: qt, den: self.den.clone() });
        }
        Self::new(self.num.clone(), &self.den * p)
    }

    pub fn checked_div(&self, rhs: &QRatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if rhs.is_laurent() {
            return self.div_laurent(&rhs.num);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn subst_q_inverse(&self) -> Self {
        Self::new(self.num.subst_q_inverse(), self.den.subst_q_inverse()).expect("nonzero denominator")
    }

    pub fn eval(&self, v: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(v)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(v)? / d)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for QRatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QLaurent> for QRatFunc {
    fn from(p: QLaurent) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for QRatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

fn add_impl(a: &QRatFunc, b: &QRatFunc, negate_b: bool) -> QRatFunc {
    let bn = if negate_b { -&b.num } else { b.num.clone() };
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return QRatFunc { num: bn, den: b.den.clone() };
    }
    if a.den == b.den {
        let num = &a.num + &bn;
        if a.den.is_one() {
            return QRatFunc::from_laurent(num);
        }
        return QRatFunc::new(num, a.den.clone()).expect("nonzero denominator");
    }
    if a.den.is_one() {
        return QRatFunc::new(&(&a.num * &b.den) + &bn, b.den.clone()).expect("nonzero denominator");
    }
    if b.den.is_one() {
        return QRatFunc::new(&a.num + &(&bn * &a.den), a.den.clone()).expect("nonzero denominator");
    }
    // denominators are primitive with zero low exponent already
    let (_, _, pa) = a.den.primitive_decomposition();
    let (_, _, pb) = b.den.primitive_decomposition();
    let (_, abar, bbar) = gcd_with_cofactors(&pa, &pb);
    let abar = QLaurent::from_int_coeffs(0, abar);
    let bbar = QLaurent::from_int_coeffs(0, bbar);
    let num = &(&a.num * &bbar) + &(&bn * &abar);
    let den = &a.den * &bbar;
    QRatFunc::new(num, den).expect("nonzero denominator")
}

impl<'a> Add<&'a QRatFunc> for &'a QRatFunc {
    type Output = QRatFunc;
    fn add(self, rhs: &QRatFunc) -> QRatFunc {
        add_impl(self, rhs, false)
    }
}

impl<'a> Sub<&'a QRatFunc> for &'a QRatFunc {
    type Output = QRatFunc;
    fn sub(self, rhs: &QRatFunc) -> QRatFunc {
        add_impl(self, rhs, true)
    }
}

impl<'a> Mul<&'a QRatFunc> for &'a QRatFunc {
    type Output = QRatFunc;
    fn mul(self, rhs: &QRatFunc) -> QRatFunc {
        if self.is_zero() || rhs.is_zero() {
            return QRatFunc::zero();
        }
        match (self.is_laurent(), rhs.is_laurent()) {
            (true, true) => QRatFunc::from_laurent(&self.num * &rhs.num),
            (true, false) => rhs.mul_laurent(&self.num),
            (false, true) => self.mul_laurent(&rhs.num),
            (false, false) => {
                QRatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
            }
        }
    }
}

/// Panics on division by zero; use [`QRatFunc::checked_div`] otherwise.
impl<'a> Div<&'a QRatFunc> for &'a QRatFunc {
    type Output = QRatFunc;
    fn div(self, rhs: &QRatFunc) -> QRatFunc {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

impl Neg for &QRatFunc {
    type Output = QRatFunc;
    fn neg(self) -> QRatFunc {
        QRatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRatFunc {
    type Output = QRatFunc;
    fn neg(self) -> QRatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QRatFunc> for QRatFunc {
            type Output = QRatFunc;
            fn $m(self, rhs: QRatFunc) -> QRatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QRatFunc> for QRatFunc {
            type Output = QRatFunc;
            fn $m(self, rhs: &QRatFunc) -> QRatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl core::iter::Sum for QRatFunc {
    fn sum<I: Iterator<Item = QRatFunc>>(iter: I) -> Self {
        iter.fold(QRatFunc::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}

impl fmt::Debug for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRatFunc({self})")
    }
}
