use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::{QLaurent, QRatFunc};
use crate::ballot::{tilde_qcatalan, BallotCache};
use crate::error::{Error, Result};
use crate::qcore::{q_factorial, q_int, qbinom_at, subst_affine, to_qbinom_basis, QBinomExpansion, XPoly};

use super::c_theorem1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Difference,
    Theorem1,
    Recurrence,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Difference, Method::Theorem1, Method::Recurrence];

    pub fn name(self) -> &'static str {
        match self {
            Method::Difference => "difference",
            Method::Theorem1 => "theorem1",
            Method::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Inconsistent(format!("unknown method {s:?}")))
    }
}

/// `C_1, C_2, ...` built by one method. `polys[0]` is `C_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFamily {
    method: Method,
    polys: Vec<XPoly>,
}

impl CFamily {
    pub fn new(method: Method) -> Self {
        CFamily { method, polys: vec![XPoly::one()] }
    }

    pub fn build<C: BallotCache + ?Sized>(method: Method, nmax: u32, cache: &mut C) -> Result<Self> {
        let mut fam = Self::new(method);
        fam.extend_to(nmax, cache)?;
        Ok(fam)
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Largest `n` with `C_n` available.
    pub fn max_n(&self) -> u32 {
        self.polys.len() as u32
    }

    /// `C_n(x|q)` for `1 <= n <= max_n`.
    pub fn get(&self, n: u32) -> Option<&XPoly> {
        n.checked_sub(1).and_then(|i| self.polys.get(i as usize))
    }

    pub fn polys(&self) -> &[XPoly] {
        &self.polys
    }

    pub fn extend_to<C: BallotCache + ?Sized>(&mut self, nmax: u32, cache: &mut C) -> Result<()> {
        let mut tildes: Vec<QLaurent> = Vec::new();
        while self.max_n() < nmax {
            let n = self.max_n();
            let next = match self.method {
                Method::Difference => difference_step(&self.polys[n as usize - 1])?,
                Method::Theorem1 => c_theorem1(n, cache),
                Method::Recurrence => {
                    while tildes.len() + 1 < n as usize {
                        tildes.push(tilde_qcatalan(tildes.len() as u32, cache));
                    }
                    recurrence_step(n, &self.polys, &tildes)?
                }
            };
            self.polys.push(next);
        }
        Ok(())
    }
}

/// `C_{n+1}` from `C_n` through `Delta_q C_{n+1}(x) = q C_n(q^2 x + q + 1)`
/// and `C_{n+1}(-1/q) = 0`.
pub fn difference_step(c_n: &XPoly) -> Result<XPoly> {
    let q = QRatFunc::q();
    let r = subst_affine(c_n, &QRatFunc::from_laurent(QLaurent::monomial_int(1, 2)), &QRatFunc::from_laurent(QLaurent::from_i64s(0, &[1, 1])))
        .scale(&q);
    let b = to_qbinom_basis(&r)?;
    // Delta_q shifts the q-binomial basis down by one, so antidifference shifts it up
    let at = -&q.recip()?;
    let mut constant = QRatFunc::zero();
    for (j, c) in b.coeffs.iter().enumerate() {
        constant = &constant - &(c * &qbinom_at(&at, j as u32 + 1));
    }
    let mut coeffs = vec![constant];
    coeffs.extend(b.coeffs);
    Ok(QBinomExpansion::new(coeffs).to_xpoly())
}

/// `C_{n+1}` from
/// `[n] C_{n+1} = ([2n-1] + x q^{2n-1}) C_n + sum_{j=0}^{n-2} [n-j-1] C~_j C_{n-j} q^{2j+1}`.
///
/// `prev` holds `C_1..C_n` and `tildes` at least `C~_0..C~_{n-2}`. The
/// quotient by `[n]_q` must leave every coefficient with a denominator
/// dividing `[n]_q!`; anything else is reported as an inconsistency.
pub fn recurrence_step(n: u32, prev: &[XPoly], tildes: &[QLaurent]) -> Result<XPoly> {
    assert!(n >= 1 && prev.len() >= n as usize, "need C_1..C_n");
    let n64 = n as i64;
    let c_n = &prev[n as usize - 1];
    let lin = QRatFunc::from_laurent(q_int(2 * n64 - 1));
    let mut acc = &c_n.scale(&lin) + &c_n.shift_x(1).scale(&QRatFunc::from_laurent(QLaurent::monomial_int(1, 2 * n64 - 1)));
    for j in 0..n.saturating_sub(1) {
        let w = (&q_int((n - j - 1) as i64) * &tildes[j as usize]).shift(2 * j as i64 + 1);
        acc = &acc + &prev[(n - j) as usize - 1].scale(&QRatFunc::from_laurent(w));
    }
    let step = q_int(n64);
    let fact = q_factorial(n);
    let out = acc.try_map_coeffs(|c| c.div_laurent(&step))?;
    for c in out.coeffs() {
        if fact.div_exact(c.denom()).is_none() {
            return Err(Error::Inconsistent(format!(
                "coefficient {c} of C_{} has a denominator outside [{n}]_q!",
                n + 1
            )));
        }
    }
    Ok(out)
}

pub fn c_difference(nmax: u32) -> Result<CFamily> {
    let mut fam = CFamily::new(Method::Difference);
    while fam.max_n() < nmax {
        let next = difference_step(&fam.polys[fam.polys.len() - 1])?;
        fam.polys.push(next);
    }
    Ok(fam)
}

pub fn c_recurrence<C: BallotCache + ?Sized>(nmax: u32, cache: &mut C) -> Result<CFamily> {
    CFamily::build(Method::Recurrence, nmax, cache)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballot::BallotTable;

    fn lp(low: i64, cs: &[i64]) -> QRatFunc {
        QRatFunc::from_laurent(QLaurent::from_i64s(low, cs))
    }

    #[test]
    fn first_steps_of_each_method() {
        let c2 = XPoly::linear(QRatFunc::one(), QRatFunc::q());
        assert_eq!(difference_step(&XPoly::one()).unwrap(), c2);
        assert_eq!(recurrence_step(1, &[XPoly::one()], &[]).unwrap(), c2);
        let mut t = BallotTable::new();
        let fam = CFamily::build(Method::Difference, 4, &mut t).unwrap();
        let e = to_qbinom_basis(fam.get(4).unwrap()).unwrap();
        assert_eq!(e.coeffs[2], lp(4, &[1, 1, 1, 1, 1]));
        assert_eq!(fam.get(0), None);
        assert_eq!(fam.get(1), Some(&XPoly::one()));
    }

    #[test]
    fn recurrence_numerator_at_two() {
        // [2] C_3 = (1 + 2q + q^2) + (q + 2q^2 + 2q^3) x + q^4 x^2
        let c2 = XPoly::linear(QRatFunc::one(), QRatFunc::q());
        let c3 = recurrence_step(2, &[XPoly::one(), c2], &[QLaurent::one()]).unwrap();
        let scaled = c3.scale(&lp(0, &[1, 1]));
        assert_eq!(scaled, XPoly::from_coeffs(vec![lp(0, &[1, 2, 1]), lp(1, &[1, 2, 2]), lp(4, &[1])]));
    }

    #[test]
    fn methods_agree_small() {
        let mut t = BallotTable::new();
        let fams: Vec<CFamily> = Method::ALL.iter().map(|&m| CFamily::build(m, 7, &mut t).unwrap()).collect();
        assert_eq!(fams[0].polys(), fams[1].polys());
        assert_eq!(fams[1].polys(), fams[2].polys());
        assert_eq!(c_difference(7).unwrap().polys(), fams[0].polys());
    }

    #[test]
    fn vanishing_and_degree() {
        let mut t = BallotTable::new();
        let fam = CFamily::build(Method::Theorem1, 8, &mut t).unwrap();
        let at = lp(-1, &[-1]);
        for n in 1..=8 {
            let c = fam.get(n).unwrap();
            assert_eq!(c.degree(), Some(n as usize - 1));
            if n >= 2 {
                assert!(c.eval(&at).is_zero(), "n={n}");
            }
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("nosuch".parse::<Method>().is_err());
    }
}
