use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{zpoly, BigRat};
use crate::error::{Error, Result};

/// Laurent polynomial in `q` with rational coefficients.
///
/// Stored as `q^low * (c_0 + c_1 q + ... + c_d q^d) / den` where the `c_i`
/// are integers, `c_0` and `c_d` are nonzero, `den > 0`, and `den` shares no
/// factor with the content of the `c_i`. That form is canonical, so derived
/// equality is equality of polynomials. Integer-coefficient polynomials
/// (the common case) have `den == 1` and never touch rational arithmetic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QLaurent {
    low: i64,
    coeffs: Vec<BigInt>,
    den: BigInt,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent { low: 0, coeffs: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::monomial_int(1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial_int(1, 1)
    }

    pub fn monomial_int(c: i64, exp: i64) -> Self {
        Self::from_int_coeffs(exp, vec![BigInt::from(c)])
    }

    pub fn monomial(c: BigRat, exp: i64) -> Self {
        let (num, den) = c.into_raw();
        Self::build(exp, vec![num], den)
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_int_coeffs(0, vec![c.into()])
    }

    /// `coeffs[i]` multiplies `q^(low + i)`.
    pub fn from_int_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        Self::build(low, coeffs, BigInt::one())
    }

    /// Small-integer convenience: `coeffs[i]` multiplies `q^(low + i)`.
    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::from_int_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRat)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| &acc + &Self::monomial(c, e))
    }

    /// Canonicalizes `q^low * coeffs / den`.
    fn build(mut low: i64, mut coeffs: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator in QLaurent");
        zpoly::trim(&mut coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            low += lead_zeros as i64;
        }
        if den.is_negative() {
            den = -den;
            for c in coeffs.iter_mut() {
                *c = -core::mem::take(c);
            }
        }
        if !den.is_one() {
            let g = zpoly::content(&coeffs).gcd(&den);
            if !g.is_one() {
                den /= &g;
                for c in coeffs.iter_mut() {
                    *c /= &g;
                }
            }
        }
        QLaurent { low, coeffs, den }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one() && self.den.is_one()
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// True if there are no negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// True for a nonzero constant or zero.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// Single term `c q^e`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, BigRat)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, BigRat::new(c.clone(), self.den.clone())))
    }

    pub fn coeff(&self, exp: i64) -> BigRat {
        let i = exp - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            return BigRat::zero();
        }
        BigRat::new(self.coeffs[i as usize].clone(), self.den.clone())
    }

    pub fn leading_coeff(&self) -> BigRat {
        match self.max_exp() {
            Some(e) => self.coeff(e),
            None => BigRat::zero(),
        }
    }

    /// True if nonzero and every nonzero coefficient is a positive integer.
    pub fn has_positive_int_coeffs(&self) -> bool {
        !self.is_zero() && self.is_integral() && self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// True if every nonzero coefficient is positive (rationals allowed).
    pub fn has_positive_coeffs(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QLaurent { low: self.low + e, coeffs: self.coeffs.clone(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let coeffs = self.coeffs.iter().map(|x| x * c.numer()).collect();
        Self::build(self.low, coeffs, &self.den * c.denom())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&BigRat::from_integer(c.clone()))
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn subst_q_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        QLaurent { low: -self.max_exp().unwrap(), coeffs, den: self.den.clone() }
    }

    /// Exact value at `q = v`.
    pub fn eval(&self, v: &BigRat) -> Result<BigRat> {
        if self.is_zero() {
            return Ok(BigRat::zero());
        }
        if v.is_zero() {
            if self.low < 0 {
                return Err(Error::EvalAtZero);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + BigRat::from_integer(c.clone());
        }
        Ok(acc * pow_rat(v, self.low) / BigRat::from_integer(self.den.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in the Laurent ring, `None` if `d` does not divide.
    pub fn div_exact(&self, d: &QLaurent) -> Option<QLaurent> {
        assert!(!d.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let cd = zpoly::content(&d.coeffs);
        let prim: Vec<BigInt> = d.coeffs.iter().map(|c| c / &cd).collect();
        let quot = zpoly::div_exact(&self.coeffs, &prim)?;
        // (A / da) / (cd * B' / dd) = (A / B') * dd / (da * cd)
        let q = Self::build(self.low - d.low, quot, &self.den * &cd);
        Some(q.scale_int(&d.den))
    }

    /// Primitive integer polynomial with positive leading coefficient
    /// obtained by dropping the monomial factor and the rational content.
    /// Returns the dropped pieces as `(scalar, exponent, primitive)` with
    /// `self = scalar * q^exponent * primitive`.
    pub(crate) fn primitive_decomposition(&self) -> (BigRat, i64, Vec<BigInt>) {
        debug_assert!(!self.is_zero());
        let mut c = zpoly::content(&self.coeffs);
        if self.coeffs.last().unwrap().is_negative() {
            c = -c;
        }
        let prim = self.coeffs.iter().map(|x| x / &c).collect();
        (BigRat::new(c, self.den.clone()), self.low, prim)
    }

    /// Gcd in `Q[q]` of the two arguments after stripping monomial factors:
    /// a primitive integer polynomial with positive leading coefficient and
    /// nonzero constant term.
    pub fn gcd(&self, other: &QLaurent) -> Result<QLaurent> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let a = if self.is_zero() { Vec::new() } else { self.coeffs.clone() };
        let b = if other.is_zero() { Vec::new() } else { other.coeffs.clone() };
        let g = super::gcd::gcd_modular(&a, &b);
        Ok(Self::from_int_coeffs(0, g))
    }
}

fn pow_rat(v: &BigRat, e: i64) -> BigRat {
    let base = if e < 0 { v.recip() } else { v.clone() };
    let mut acc = BigRat::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl Default for QLaurent {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QLaurent {
    fn from(c: i64) -> Self {
        Self::monomial_int(c, 0)
    }
}

impl From<BigRat> for QLaurent {
    fn from(c: BigRat) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;

    fn add(self, rhs: &QLaurent) -> QLaurent {
        combine(self, rhs, false)
    }
}

impl<'a> Sub<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;

    fn sub(self, rhs: &QLaurent) -> QLaurent {
        combine(self, rhs, true)
    }
}

fn combine(a: &QLaurent, b: &QLaurent, negate_b: bool) -> QLaurent {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let (den, fa, fb) = if a.den == b.den {
        (a.den.clone(), None, None)
    } else {
        let l = a.den.lcm(&b.den);
        let fa = &l / &a.den;
        let fb = &l / &b.den;
        (l, Some(fa), Some(fb))
    };
    let low = a.low.min(b.low);
    let high = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut out = vec![BigInt::zero(); (high - low + 1) as usize];
    let off_a = (a.low - low) as usize;
    for (i, c) in a.coeffs.iter().enumerate() {
        match &fa {
            Some(f) => out[off_a + i] += c * f,
            None => out[off_a + i] += c,
        }
    }
    let off_b = (b.low - low) as usize;
    for (i, c) in b.coeffs.iter().enumerate() {
        let term = match &fb {
            Some(f) => c * f,
            None => c.clone(),
        };
        if negate_b {
            out[off_b + i] -= term;
        } else {
            out[off_b + i] += term;
        }
    }
    QLaurent::build(low, out, den)
}

impl<'a> Mul<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;

    fn mul(self, rhs: &QLaurent) -> QLaurent {
        if self.is_zero() || rhs.is_zero() {
            return QLaurent::zero();
        }
        let prod = zpoly::mul(&self.coeffs, &rhs.coeffs);
        QLaurent::build(self.low + rhs.low, prod, &self.den * &rhs.den)
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;

    fn neg(self) -> QLaurent {
        QLaurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: &QLaurent) -> QLaurent {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}

impl core::iter::Sum for QLaurent {
    fn sum<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::zero(), |a, b| &a + &b)
    }
}

/// Renders in ascending exponent order, e.g. `1+q+2q^2+q^3`, `q^-1`,
/// `(1/2)q^2`.
impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            if e == 0 {
                write_rat(f, &a)?;
                continue;
            }
            if !a.is_one() {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "({}/{})", a.numer(), a.denom())?;
                }
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

fn write_rat(f: &mut fmt::Formatter<'_>, a: &BigRat) -> fmt::Result {
    if a.is_integer() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}
