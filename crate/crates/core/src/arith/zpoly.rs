//! Dense univariate polynomials over `Z`, coefficient `i` multiplying `q^i`.
//!
//! These helpers assume trimmed input (no trailing zeros) unless noted.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

/// Nonnegative gcd of all coefficients; zero for the zero polynomial.
pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let mut c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    if p.last().is_some_and(Signed::is_negative) {
        c = -c;
    }
    if c.is_one() {
        p.to_vec()
    } else {
        p.iter().map(|x| x / &c).collect()
    }
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division over `Z`. Returns `None` if `b` does not divide `a` with
/// an integral quotient. When `b` is primitive this is the same as
/// divisibility over `Q` (Gauss).
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + db];
        if top.is_zero() {
            continue;
        }
        let (qc, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                rem[i + j] -= &qc * bc;
            }
        }
        quot[i] = qc;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`, computed
/// fraction-free.
pub(crate) fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b);
    let lead = &b[db];
    let mut rem = a.to_vec();
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let top = rem.last().cloned().unwrap();
        for c in rem.iter_mut() {
            *c *= lead;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[shift + j] -= &top * bc;
        }
        trim(&mut rem);
    }
    rem
}
