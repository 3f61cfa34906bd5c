//! Exhaustive lattice-path enumeration, used only as an oracle.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::QLaurent;
use crate::error::{Error, Result};

/// Default cap on the number of free steps `n + k` for enumeration.
pub const DEFAULT_PATH_CAP: u32 = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    East,
    North,
}

/// A path in `P(n, k)`: from `(0,0)` to `(n+1, k)`, last step East, never
/// above `y = x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    /// Validates the step sequence.
    pub fn new(steps: Vec<Step>) -> Option<Self> {
        if steps.last() != Some(&Step::East) {
            return None;
        }
        let (mut e, mut m) = (0u32, 0u32);
        for s in &steps {
            match s {
                Step::East => e += 1,
                Step::North => m += 1,
            }
            if m > e {
                return None;
            }
        }
        Some(LatticePath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// `(n, k)` such that the path lies in `P(n, k)`.
    pub fn shape(&self) -> (u32, u32) {
        let k = self.steps.iter().filter(|s| **s == Step::North).count() as u32;
        (self.steps.len() as u32 - k - 1, k)
    }

    /// `A`: cells between the path and the x-axis.
    pub fn area(&self) -> u32 {
        let mut y = 0;
        let mut a = 0;
        for s in &self.steps {
            match s {
                Step::North => y += 1,
                Step::East => a += y,
            }
        }
        a
    }

    /// `A'`: cells above the path, below both `y = x` and `y = k`.
    pub fn area_above(&self) -> u32 {
        let (_, k) = self.shape();
        let (mut x, mut y) = (0u32, 0u32);
        let mut a = 0;
        for s in &self.steps {
            match s {
                Step::North => y += 1,
                Step::East => {
                    a += x.min(k) - y;
                    x += 1;
                }
            }
        }
        a
    }
}

fn check_cap(n: u32, k: u32, cap: u32) -> Result<()> {
    if n + k > cap {
        return Err(Error::PathCapExceeded { n, k, steps: n + k, cap });
    }
    Ok(())
}

/// Every path in `P(n, k)`, in lexicographic step order (East first).
pub fn lattice_paths(n: u32, k: u32, cap: u32) -> Result<Vec<LatticePath>> {
    check_cap(n, k, cap)?;
    let mut out = Vec::new();
    if k > n {
        return Ok(out);
    }
    let mut buf = Vec::with_capacity((n + k + 1) as usize);
    collect(n, k, 0, 0, &mut buf, &mut out);
    Ok(out)
}

fn collect(n: u32, k: u32, e: u32, m: u32, buf: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
    if e == n && m == k {
        let mut steps = buf.clone();
        steps.push(Step::East);
        out.push(LatticePath { steps });
        return;
    }
    if e < n {
        buf.push(Step::East);
        collect(n, k, e + 1, m, buf, out);
        buf.pop();
    }
    if m < k && m < e {
        buf.push(Step::North);
        collect(n, k, e, m + 1, buf, out);
        buf.pop();
    }
}

/// Walks every path of `P(n, k)` without materializing it and tallies
/// `A` (or `A'` when `above`) into a histogram.
fn area_histogram(n: u32, k: u32, above: bool) -> Vec<u64> {
    let max = (k * n) as usize + 1;
    let mut hist = vec![0u64; max];
    if k <= n {
        walk(n, k, 0, 0, 0, above, &mut hist);
    }
    hist
}

fn walk(n: u32, k: u32, e: u32, m: u32, area: u32, above: bool, hist: &mut [u64]) {
    if e == n && m == k {
        // final East step from column n at height k
        let last = if above { n.min(k) - k } else { k };
        hist[(area + last) as usize] += 1;
        return;
    }
    if e < n {
        let add = if above { e.min(k) - m } else { m };
        walk(n, k, e + 1, m, area + add, above, hist);
    }
    if m < k && m < e {
        walk(n, k, e, m + 1, area, above, hist);
    }
}

fn histogram_poly(hist: Vec<u64>) -> QLaurent {
    QLaurent::from_int_coeffs(0, hist.into_iter().map(BigInt::from).collect())
}

/// `sum_{gamma in P(n,k)} q^{A(gamma)}` by exhaustive enumeration.
pub fn qballot_paths(n: u32, k: u32, cap: u32) -> Result<QLaurent> {
    check_cap(n, k, cap)?;
    Ok(histogram_poly(area_histogram(n, k, false)))
}

/// `sum_{gamma in P(m,n)} q^{A'(gamma)}` by exhaustive enumeration.
pub fn tilde_f_paths(m: u32, n: u32, cap: u32) -> Result<QLaurent> {
    if m < n {
        return Err(Error::InvalidTildeIndex { m, n });
    }
    check_cap(m, n, cap)?;
    Ok(histogram_poly(area_histogram(m, n, true)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QLaurent;

    #[test]
    fn validation() {
        use Step::*;
        assert!(LatticePath::new(vec![East]).is_some());
        assert!(LatticePath::new(vec![North, East]).is_none());
        assert!(LatticePath::new(vec![East, North]).is_none());
        let p = LatticePath::new(vec![East, North, East, North, East]).unwrap();
        assert_eq!(p.shape(), (2, 2));
        assert_eq!(p.area(), 1 + 2);
        assert_eq!(p.area_above(), 0);
    }

    #[test]
    fn table_ground_truth() {
        assert_eq!(qballot_paths(0, 0, 26).unwrap(), QLaurent::one());
        assert_eq!(qballot_paths(1, 1, 26).unwrap(), QLaurent::q());
        assert_eq!(qballot_paths(2, 2, 26).unwrap(), QLaurent::from_i64s(2, &[1, 1]));
        assert_eq!(qballot_paths(3, 3, 26).unwrap(), QLaurent::from_i64s(3, &[1, 1, 2, 1]));
        assert!(qballot_paths(1, 2, 26).unwrap().is_zero());
    }

    #[test]
    fn materialized_paths_match_histogram() {
        for n in 0..=6 {
            for k in 0..=n {
                let paths = lattice_paths(n, k, 26).unwrap();
                let a: QLaurent = paths.iter().map(|p| QLaurent::monomial_int(1, p.area() as i64)).sum();
                let b: QLaurent = paths.iter().map(|p| QLaurent::monomial_int(1, p.area_above() as i64)).sum();
                assert_eq!(a, qballot_paths(n, k, 26).unwrap());
                assert_eq!(b, tilde_f_paths(n, k, 26).unwrap());
                assert!(paths.iter().all(|p| p.shape() == (n, k)));
            }
        }
    }

    #[test]
    fn tilde_small_cases() {
        assert_eq!(tilde_f_paths(1, 1, 26).unwrap(), QLaurent::one());
        assert_eq!(tilde_f_paths(2, 1, 26).unwrap(), QLaurent::from_i64s(0, &[1, 1]));
        assert!(matches!(tilde_f_paths(1, 2, 26), Err(Error::InvalidTildeIndex { .. })));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            qballot_paths(14, 13, 26),
            Err(Error::PathCapExceeded { steps: 27, cap: 26, .. })
        ));
        assert!(qballot_paths(3, 2, 5).is_ok());
    }
}
