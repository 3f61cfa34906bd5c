use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::arith::{BigRat, QLaurent, QRatFunc};
use crate::error::{Error, Result};

/// Polynomial in `x` with coefficients in `Q(q)`, coefficient `i`
/// multiplying `x^i`. Trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<QRatFunc>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QRatFunc::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        XPoly { coeffs: vec![QRatFunc::zero(), QRatFunc::one()] }
    }

    pub fn constant(c: QRatFunc) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `a + b x`.
    pub fn linear(a: QRatFunc, b: QRatFunc) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(mut coeffs: Vec<QRatFunc>) -> Self {
        while coeffs.last().is_some_and(QRatFunc::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn from_laurent_coeffs(coeffs: Vec<QLaurent>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(QRatFunc::from_laurent).collect())
    }

    pub fn coeffs(&self) -> &[QRatFunc] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<QRatFunc> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> QRatFunc {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> QRatFunc {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &QRatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn map_coeffs<F: FnMut(&QRatFunc) -> QRatFunc>(&self, f: F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map_coeffs<F: FnMut(&QRatFunc) -> Result<QRatFunc>>(&self, f: F) -> Result<Self> {
        Ok(Self::from_coeffs(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }

    /// Multiply by `x^k`.
    pub fn shift_x(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QRatFunc::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    /// Horner evaluation at `x = v`.
    pub fn eval(&self, v: &QRatFunc) -> QRatFunc {
        let mut acc = QRatFunc::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * v) + c;
        }
        acc
    }

    /// Substitutes a rational value for `q` in every coefficient, giving a
    /// polynomial with constant coefficients.
    pub fn specialize_q(&self, v: &BigRat) -> Result<Self> {
        self.try_map_coeffs(|c| Ok(QRatFunc::constant(c.eval(v)?)))
    }

    /// Evaluates at a rational `x` after specializing `q`.
    pub fn eval_numeric(&self, q: &BigRat, x: &BigRat) -> Result<BigRat> {
        let mut acc = BigRat::from_integer(0.into());
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.eval(q)?;
        }
        Ok(acc)
    }

    /// Exact division by `c0 + c1 x` with `c1 != 0`; errors if the remainder
    /// is nonzero.
    pub fn div_linear_exact(&self, c0: &QRatFunc, c1: &QRatFunc) -> Result<Self> {
        let Some(d) = self.degree() else {
            return Ok(Self::zero());
        };
        if c1.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if d == 0 {
            return Err(Error::Inconsistent("constant is not divisible by a linear polynomial".into()));
        }
        let mut quot = vec![QRatFunc::zero(); d];
        let mut carry = self.coeffs[d].clone();
        for i in (0..d).rev() {
            let qi = carry.checked_div(c1)?;
            carry = &self.coeffs[i] - &(c0 * &qi);
            quot[i] = qi;
        }
        if !carry.is_zero() {
            return Err(Error::Inconsistent(alloc::format!("nonzero remainder {carry} in linear division")));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// True if every coefficient is a Laurent polynomial.
    pub fn has_laurent_coeffs(&self) -> bool {
        self.coeffs.iter().all(QRatFunc::is_laurent)
    }
}

impl<'a> Add<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        XPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![QRatFunc::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        XPoly::from_coeffs(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<XPoly> for XPoly {
            type Output = XPoly;
            fn $m(self, rhs: XPoly) -> XPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a XPoly> for XPoly {
            type Output = XPoly;
            fn $m(self, rhs: &XPoly) -> XPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Writes `c` as a factor in front of a basis element: bare if it is a
/// single positive term, parenthesized otherwise.
pub(crate) fn write_coeff(f: &mut fmt::Formatter<'_>, c: &QRatFunc) -> fmt::Result {
    let bare = c.is_laurent() && c.numer().is_monomial() && c.numer().has_positive_coeffs();
    if bare {
        write!(f, "{c}")
    } else {
        write!(f, "({c})")
    }
}

/// Ascending powers of `x`, e.g. `(1+q) + ((q+2q^2+2q^3)/(1+q))x + (q^4/(1+q))x^2`.
impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if i == 0 {
                write_coeff(f, c)?;
                continue;
            }
            if !c.is_one() {
                write_coeff(f, c)?;
            }
            if i == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}
