//! Univariate gcd over `Z[q]`.
//!
//! Two independent routes: a primitive polynomial remainder sequence
//! (Euclid with content stripping at every step) and a small-primes modular
//! algorithm with CRT lifting. The modular route is what normalization uses;
//! the Euclidean one is kept as a cross-check.
//!
//! Both take and return dense integer coefficient vectors and produce the
//! primitive gcd with positive leading coefficient.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::zpoly;

/// Primitive-PRS gcd. Either argument may be zero, not both.
pub fn gcd_euclid(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = zpoly::primitive(a);
    let mut b = zpoly::primitive(b);
    zpoly::trim(&mut a);
    zpoly::trim(&mut b);
    assert!(!(a.is_empty() && b.is_empty()), "gcd of two zero polynomials");
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = zpoly::pseudo_rem(&a, &b);
        a = b;
        b = zpoly::primitive(&r);
    }
    a
}

/// Modular gcd. Either argument may be zero, not both.
pub fn gcd_modular(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    gcd_with_cofactors(a, b).0
}

/// Returns `(g, a / g, b / g)` with `g` primitive, positive leading
/// coefficient. Cofactors are computed up to the sign/content of the inputs:
/// `a = g * abar` exactly.
pub(crate) fn gcd_with_cofactors(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    zpoly::trim(&mut a);
    zpoly::trim(&mut b);
    assert!(!(a.is_empty() && b.is_empty()), "gcd of two zero polynomials");
    if a.is_empty() {
        let g = zpoly::primitive(&b);
        let bb = zpoly::div_exact(&b, &g).expect("primitive part divides");
        return (g, Vec::new(), bb);
    }
    if b.is_empty() {
        let g = zpoly::primitive(&a);
        let aa = zpoly::div_exact(&a, &g).expect("primitive part divides");
        return (g, aa, Vec::new());
    }
    // Strip contents; they never contribute to the primitive gcd.
    let ca = zpoly::content(&a);
    let cb = zpoly::content(&b);
    let pa: Vec<BigInt> = a.iter().map(|c| c / &ca).collect();
    let pb: Vec<BigInt> = b.iter().map(|c| c / &cb).collect();
    if pa.len() == 1 || pb.len() == 1 {
        return (vec![BigInt::one()], a, b);
    }
    let (g, qa, qb) = modular_primitive(&pa, &pb);
    let abar = qa.into_iter().map(|c| c * &ca).collect();
    let bbar = qb.into_iter().map(|c| c * &cb).collect();
    (g, abar, bbar)
}

/// Core of the modular algorithm; `a` and `b` are primitive of degree >= 1.
fn modular_primitive(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let lc_a = a.last().unwrap();
    let lc_b = b.last().unwrap();
    let gamma = lc_a.gcd(lc_b);
    let mut primes = PrimeStream::new();
    let mut best_deg = usize::MAX;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<Vec<BigInt>> = None;
    loop {
        let p = primes.next_prime();
        let pb_ = BigInt::from(p);
        if (lc_a % &pb_).is_zero() || (lc_b % &pb_).is_zero() {
            continue;
        }
        let am = reduce(a, p);
        let bm = reduce(b, p);
        let mut g = gcd_mod_p(am, bm, p);
        let d = g.len() - 1;
        if d == 0 {
            return (vec![BigInt::one()], a.to_vec(), b.to_vec());
        }
        if d > best_deg {
            continue;
        }
        let gm = to_mod(&gamma, p);
        for c in g.iter_mut() {
            *c = mul_mod(*c, gm, p);
        }
        if d < best_deg {
            best_deg = d;
            acc = g.iter().map(|&c| BigInt::from(c)).collect();
            modulus = pb_;
            last = None;
        } else {
            let inv = inv_mod(to_mod(&modulus, p), p);
            for (slot, &r) in acc.iter_mut().zip(g.iter()) {
                let cur = to_mod(slot, p);
                let diff = (r + p - cur) % p;
                let t = mul_mod(diff, inv, p);
                *slot += &modulus * BigInt::from(t);
            }
            modulus *= pb_;
        }
        let half = &modulus >> 1u32;
        let sym: Vec<BigInt> = acc
            .iter()
            .map(|c| if c > &half { c - &modulus } else { c.clone() })
            .collect();
        let cand = zpoly::primitive(&sym);
        if last.as_ref() == Some(&cand) {
            if let (Some(qa), Some(qb)) = (zpoly::div_exact(a, &cand), zpoly::div_exact(b, &cand)) {
                return (cand, qa, qb);
            }
        }
        last = Some(cand);
    }
}

fn to_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
    a.iter().map(|c| to_mod(c, p)).collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn trim_mod(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Monic gcd over `F_p`. Inputs are nonzero modulo `p`.
fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim_mod(&mut a);
    trim_mod(&mut b);
    while !b.is_empty() {
        // a <- a mod b
        let db = b.len() - 1;
        let inv = inv_mod(b[db], p);
        while a.len() > db && !a.is_empty() {
            let shift = a.len() - 1 - db;
            let factor = mul_mod(*a.last().unwrap(), inv, p);
            for (j, &bc) in b.iter().enumerate() {
                let sub = mul_mod(factor, bc, p);
                a[shift + j] = (a[shift + j] + p - sub) % p;
            }
            trim_mod(&mut a);
        }
        core::mem::swap(&mut a, &mut b);
    }
    let inv = inv_mod(*a.last().unwrap(), p);
    for c in a.iter_mut() {
        *c = mul_mod(*c, inv, p);
    }
    a
}

/// Descending primes just below 2^62.
struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    fn new() -> Self {
        PrimeStream { next: (1u64 << 62) - 1 }
    }

    fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime(c) {
                return c;
            }
        }
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cases_by_hand() {
        // gcd(q^2 - 1, q^3 - 1) = q - 1
        assert_eq!(gcd_modular(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])), p(&[-1, 1]));
        assert_eq!(gcd_euclid(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])), p(&[-1, 1]));
        // 1 + q has no root at 0
        assert_eq!(gcd_modular(&p(&[1, 1]), &p(&[0, 0, 0, 0, 1])), p(&[1]));
        assert_eq!(gcd_modular(&p(&[6, 4]), &p(&[0, 0])), p(&[3, 2]));
    }

    #[test]
    fn large_coefficients_need_several_primes() {
        // g = 10^30 q^2 + 7 q - 3, times two coprime cofactors
        let big = BigInt::from(10u64).pow(30);
        let g = vec![BigInt::from(-3), BigInt::from(7), big];
        let a = zpoly::mul(&g, &p(&[1, 1, 1]));
        let b = zpoly::mul(&g, &p(&[5, 0, 2, 1]));
        assert_eq!(gcd_modular(&a, &b), g);
        assert_eq!(gcd_euclid(&a, &b), g);
        let (gg, qa, qb) = gcd_with_cofactors(&a, &b);
        assert_eq!(gg, g);
        assert_eq!(zpoly::mul(&gg, &qa), a);
        assert_eq!(zpoly::mul(&gg, &qb), b);
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0u64..2000 {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), trial, "n = {n}");
        }
    }
}
