use alloc::vec;

use super::q_int;
use crate::arith::QLaurent;

/// q-Stirling numbers of the second kind:
/// `S_q(n, k) = S_q(n-1, k-1) + [k]_q S_q(n-1, k)`, `S_q(0, 0) = 1`,
/// `S_q(n, 0) = S_q(0, k) = 0` otherwise.
pub fn q_stirling(n: u32, k: u32) -> QLaurent {
    if k > n {
        return QLaurent::zero();
    }
    // row[j] = S_q(m, j) for the current m
    let mut row = vec![QLaurent::zero(); k as usize + 1];
    row[0] = QLaurent::one();
    for _ in 1..=n {
        for j in (1..=k as usize).rev() {
            row[j] = &row[j - 1] + &(&q_int(j as i64) * &row[j]);
        }
        row[0] = QLaurent::zero();
    }
    row.swap_remove(k as usize)
}
