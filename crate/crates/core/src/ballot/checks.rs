use alloc::format;
use alloc::vec::Vec;

use super::{qcatalan, tilde_f, tilde_qcatalan, BallotCache};
use crate::arith::QLaurent;
use crate::qcore::{gauss_binom, q_int};
use crate::report::CheckResult;

/// Both Catalan convolutions for `0 <= n < maxn`:
/// `C_{n+1} = sum_i C_i C_{n-i} q^{(i+1)(n-i)}` and
/// `C~_{n+1} = sum_i q^i C~_i C~_{n-i}`.
pub fn verify_carlitz_convolution<C: BallotCache + ?Sized>(maxn: u32, cache: &mut C) -> Vec<CheckResult> {
    let cs: Vec<QLaurent> = (0..=maxn).map(|n| qcatalan(n, cache)).collect();
    let ts: Vec<QLaurent> = (0..=maxn).map(|n| tilde_qcatalan(n, cache)).collect();
    verify_carlitz_convolution_with(maxn, |n| cs[n as usize].clone(), |n| ts[n as usize].clone())
}

/// As [`verify_carlitz_convolution`], with caller-supplied sequences.
pub fn verify_carlitz_convolution_with<F, G>(maxn: u32, mut c: F, mut ct: G) -> Vec<CheckResult>
where
    F: FnMut(u32) -> QLaurent,
    G: FnMut(u32) -> QLaurent,
{
    let mut out = Vec::new();
    for n in 0..maxn {
        let n64 = n as i64;
        let rhs: QLaurent = (0..=n)
            .map(|i| (&c(i) * &c(n - i)).shift((i as i64 + 1) * (n64 - i as i64)))
            .sum();
        out.push(CheckResult::compare("carlitz", n, None, &c(n + 1), &rhs));
        let rhs: QLaurent = (0..=n).map(|i| (&ct(i) * &ct(n - i)).shift(i as i64)).sum();
        out.push(CheckResult::compare("carlitz-tilde", n, None, &ct(n + 1), &rhs));
    }
    out
}

/// `f(n+k,n|q) = sum_{j=0}^k f(n+j,n-j|q) q^{(n-j)(k-j)+j} [k,j]_q`.
pub fn key_identity_crossing<C: BallotCache + ?Sized>(n: u32, k: u32, cache: &mut C) -> CheckResult {
    let lhs = cache.qballot(n + k, n);
    let (n64, k64) = (n as i64, k as i64);
    let rhs: QLaurent = (0..=k.min(n))
        .map(|j| {
            let j64 = j as i64;
            let f = cache.qballot(n + j, n - j);
            (&f * &gauss_binom(k64, j64)).shift((n64 - j64) * (k64 - j64) + j64)
        })
        .sum();
    CheckResult::compare("key-crossing", n, Some(k), &lhs, &rhs)
}

/// `f(n+k,n-1|q) = sum_{j=0}^k f(n+j,n-j-1|q) q^{(n-j-1)(k-j)+j} [k,j]_q`, `n >= 1`.
pub fn key_identity_crossing_shifted<C: BallotCache + ?Sized>(n: u32, k: u32, cache: &mut C) -> CheckResult {
    assert!(n >= 1, "shifted identity needs n >= 1");
    let lhs = cache.qballot(n + k, n - 1);
    let (n64, k64) = (n as i64, k as i64);
    // f(n+j, n-j-1) vanishes once j = n
    let rhs: QLaurent = (0..=k.min(n - 1))
        .map(|j| {
            let j64 = j as i64;
            let f = cache.qballot(n + j, n - j - 1);
            (&f * &gauss_binom(k64, j64)).shift((n64 - j64 - 1) * (k64 - j64) + j64)
        })
        .sum();
    CheckResult::compare("key-crossing-shifted", n, Some(k), &lhs, &rhs)
}

/// The pointed-path identity for `m >= n >= 1`:
/// `[n] f~(m,n) = [m+n-1] f~(m-1,n-1) + sum_{j=0}^{n-2} [n-j-1] f~(j,j) f~(m-j-1,n-j-1) q^{2j+1}`.
///
/// With `doubled_factor` the bracket `[n-j-1]` enters the sum twice, which
/// is how the identity is sometimes transcribed; that variant is expected
/// to fail and exists so the discrepancy can be reported.
pub fn pointed_path_identity<C: BallotCache + ?Sized>(m: u32, n: u32, doubled_factor: bool, cache: &mut C) -> CheckResult {
    assert!(m >= n && n >= 1, "pointed-path identity needs m >= n >= 1");
    let id = if doubled_factor { "pointed-path-doubled" } else { "pointed-path" };
    let tf = |a: u32, b: u32, c: &mut C| tilde_f(a, b, c).expect("a >= b");
    let lhs = &q_int(n as i64) * &tf(m, n, cache);
    let mut rhs = &q_int((m + n - 1) as i64) * &tf(m - 1, n - 1, cache);
    for j in 0..n.saturating_sub(1) {
        let mut bracket = q_int((n - j - 1) as i64);
        if doubled_factor {
            bracket = &bracket * &bracket;
        }
        let term = &(&bracket * &tf(j, j, cache)) * &tf(m - j - 1, n - j - 1, cache);
        rhs = rhs + term.shift(2 * j as i64 + 1);
    }
    CheckResult::compare(id, m, Some(n), &lhs, &rhs)
}

/// `n C_{n+1} = 2n C_n + sum_{j=0}^{n-2} (n-j-1) C_j C_{n-j}` over the integers.
pub fn catalan_q1_identity(n: u32) -> CheckResult {
    use super::catalan;
    use num_bigint::BigInt;
    let lhs = BigInt::from(n) * catalan(n + 1);
    let mut rhs = BigInt::from(2 * n) * catalan(n);
    for j in 0..n.saturating_sub(1) {
        rhs += BigInt::from(n - j - 1) * catalan(j) * catalan(n - j);
    }
    if lhs == rhs {
        CheckResult::pass("catalan-q1", n, None)
    } else {
        CheckResult::fail("catalan-q1", n, None, format!("lhs = {lhs}; rhs = {rhs}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballot::BallotTable;

    #[test]
    fn convolutions_hold() {
        let mut t = BallotTable::new();
        let rs = verify_carlitz_convolution(8, &mut t);
        assert_eq!(rs.len(), 16);
        assert!(rs.iter().all(|r| r.pass), "{rs:?}");
        let rs = verify_carlitz_convolution(1, &mut t);
        assert!(rs.iter().all(|r| r.pass));
    }

    #[test]
    fn fault_injection_fails_at_first_affected_n() {
        let mut t = BallotTable::new();
        let cs: Vec<QLaurent> = (0..=6).map(|n| qcatalan(n, &mut t)).collect();
        let ts: Vec<QLaurent> = (0..=6).map(|n| tilde_qcatalan(n, &mut t)).collect();
        let rs = verify_carlitz_convolution_with(
            6,
            |n| if n == 3 { &cs[3] + &QLaurent::q() } else { cs[n as usize].clone() },
            |n| ts[n as usize].clone(),
        );
        let first = rs.iter().find(|r| !r.pass).unwrap();
        assert_eq!((first.id.as_str(), first.n), ("carlitz", 2));
        assert!(first.detail.is_some());
        assert!(rs.iter().filter(|r| r.id == "carlitz-tilde").all(|r| r.pass));
    }

    #[test]
    fn key_identities_small() {
        let mut t = BallotTable::new();
        for n in 0..=5 {
            for k in 0..=n {
                assert!(key_identity_crossing(n, k, &mut t).pass, "n={n} k={k}");
                if n >= 1 {
                    assert!(key_identity_crossing_shifted(n, k, &mut t).pass, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn pointed_path_single_factor_holds_doubled_does_not() {
        let mut t = BallotTable::new();
        for m in 1..=6 {
            for n in 1..=m {
                assert!(pointed_path_identity(m, n, false, &mut t).pass, "m={m} n={n}");
            }
        }
        // the doubled bracket is 1 when n - j - 1 = 1, so n = 3 is the first difference
        assert!(pointed_path_identity(3, 2, true, &mut t).pass);
        assert!(!pointed_path_identity(3, 3, true, &mut t).pass);
    }

    #[test]
    fn catalan_identity() {
        for n in 1..=15 {
            assert!(catalan_q1_identity(n).pass);
        }
    }
}
