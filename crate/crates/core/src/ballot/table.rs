use alloc::collections::BTreeMap;

use crate::arith::QLaurent;

/// Anything that can serve `f(n,k|q)`.
pub trait BallotCache {
    fn qballot(&mut self, n: u32, k: u32) -> QLaurent;
}

/// Memo table for `f(n,k|q) = q f(n,k-1|q) + q^k f(n-1,k|q)`.
#[derive(Clone, Debug, Default)]
pub struct BallotTable {
    memo: BTreeMap<(u32, u32), QLaurent>,
}

impl BallotTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn get(&self, n: u32, k: u32) -> Option<&QLaurent> {
        self.memo.get(&(n, k))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), &QLaurent)> {
        self.memo.iter().map(|(k, v)| (*k, v))
    }

    /// Inserts an entry without checking it; see [`BallotTable::validate`].
    pub fn insert(&mut self, n: u32, k: u32, v: QLaurent) {
        self.memo.insert((n, k), v);
    }

    /// Checks every stored entry against the recurrence, recomputed in a
    /// fresh table. Returns the first bad key.
    pub fn validate(&self) -> Result<(), (u32, u32)> {
        let mut fresh = BallotTable::new();
        for (&(n, k), v) in &self.memo {
            if fresh.qballot(n, k) != *v {
                return Err((n, k));
            }
        }
        Ok(())
    }

    /// Fills rows `0..=n` up to column `k` iteratively, so no recursion depth
    /// grows with `n`.
    fn fill(&mut self, n: u32, k: u32) {
        for i in 0..=n {
            for j in 0..=k.min(i) {
                if self.memo.contains_key(&(i, j)) {
                    continue;
                }
                let v = if i == 0 && j == 0 {
                    QLaurent::one()
                } else {
                    let left = if j > 0 { self.lookup(i, j - 1).shift(1) } else { QLaurent::zero() };
                    let up = if i > 0 { self.lookup(i - 1, j).shift(j as i64) } else { QLaurent::zero() };
                    left + up
                };
                self.memo.insert((i, j), v);
            }
        }
    }

    fn lookup(&self, n: u32, k: u32) -> QLaurent {
        if k > n {
            return QLaurent::zero();
        }
        self.memo[&(n, k)].clone()
    }
}

impl BallotCache for BallotTable {
    fn qballot(&mut self, n: u32, k: u32) -> QLaurent {
        if k > n {
            return QLaurent::zero();
        }
        if let Some(v) = self.memo.get(&(n, k)) {
            return v.clone();
        }
        self.fill(n, k);
        self.memo[&(n, k)].clone()
    }
}
