use alloc::vec::Vec;

use crate::arith::{QLaurent, QRatFunc};
use crate::ballot::BallotCache;
use crate::csequence::theorem1_expansion;
use crate::qcore::{q_factorial, qbinom_numerators, XPoly};

/// `P_n(x|q) = [1]_q ... [n-1]_q C_n(x|q)` and what the conjecture asks of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumeratorReport {
    pub n: u32,
    /// Coefficient of `x^i` in `P_n`.
    pub numerator: XPoly,
    /// `[n-1]_q!`.
    pub denominator: QLaurent,
    pub is_polynomial: bool,
    pub is_irreducible_fraction: bool,
    pub all_coeffs_positive: bool,
    /// `(min, max)` q-exponent of each x-coefficient, `None` where it is zero.
    pub coefficient_stats: Vec<Option<(i64, i64)>>,
}

impl NumeratorReport {
    /// The x-coefficients as Laurent polynomials, if they all are.
    pub fn laurent_coeffs(&self) -> Option<Vec<QLaurent>> {
        self.numerator.coeffs().iter().map(|c| c.as_laurent().cloned()).collect()
    }

    /// True when all three conjectured properties hold.
    pub fn conjecture_holds(&self) -> bool {
        self.is_polynomial && self.is_irreducible_fraction && self.all_coeffs_positive
    }
}

/// Multiplies every coefficient of `c = C_n(x|q)` by `[n-1]_q!` and
/// inspects the result.
pub fn numerator(n: u32, c: &XPoly) -> NumeratorReport {
    let den = q_factorial(n.saturating_sub(1));
    let coeffs = c
        .coeffs()
        .iter()
        .map(|a| match den.div_exact(a.denom()) {
            Some(cof) => QRatFunc::from_laurent(a.numer() * &cof),
            None => a.mul_laurent(&den),
        })
        .collect();
    report(n, XPoly::from_coeffs(coeffs), den)
}

/// The same report for `C_n` built from its q-binomial expansion, taking the
/// numerator straight from the unreduced Horner pass.
pub fn theorem1_numerator<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> NumeratorReport {
    assert!(n >= 1, "C_0 is not part of the family");
    let e = theorem1_expansion(n - 1, cache);
    let coeffs = qbinom_numerators(&e);
    report(n, XPoly::from_laurent_coeffs(coeffs), q_factorial(n - 1))
}

fn report(n: u32, numerator: XPoly, denominator: QLaurent) -> NumeratorReport {
    let laurent: Option<Vec<&QLaurent>> = numerator.coeffs().iter().map(QRatFunc::as_laurent).collect();
    let is_polynomial = laurent.as_ref().is_some_and(|cs| cs.iter().all(|c| c.is_polynomial()));
    let all_coeffs_positive =
        laurent.as_ref().is_some_and(|cs| cs.iter().all(|c| c.is_zero() || c.has_positive_coeffs()));
    let is_irreducible_fraction = match &laurent {
        Some(cs) if is_polynomial => content_coprime(cs, &denominator),
        _ => false,
    };
    let coefficient_stats = numerator
        .coeffs()
        .iter()
        .map(|c| c.as_laurent().and_then(|l| Some((l.min_exp()?, l.max_exp()?))))
        .collect();
    NumeratorReport { n, numerator, denominator, is_polynomial, is_irreducible_fraction, all_coeffs_positive, coefficient_stats }
}

/// `gcd(content_q(P), den) = 1`, where `content_q` is the gcd of all the
/// x-coefficients.
fn content_coprime(cs: &[&QLaurent], den: &QLaurent) -> bool {
    if den.is_constant() {
        return true;
    }
    // fold the denominator in first so the running gcd starts small
    let mut g = den.clone();
    for c in cs.iter().filter(|c| !c.is_zero()) {
        g = g.gcd(c).expect("nonzero arguments");
        if g.is_constant() {
            return true;
        }
    }
    g.is_constant()
}
