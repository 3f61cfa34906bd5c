//! The recurrence for `C_n(q)` attributed to Andrews, as transcribed, plus a
//! few alternate readings. Nothing here asserts; rows record what matched.

use alloc::vec::Vec;
use core::fmt;

use super::{qcatalan, tilde_qcatalan, BallotCache};
use crate::arith::{QLaurent, QRatFunc};
use crate::qcore::{gauss_binom, q_int};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AndrewsReading {
    /// `C_n = q^n/[n+1] [2n,n] + q sum_j (1-q^{n-j}) q^{(n+1-j)j} [2j+1,j] C_{n-1-j}`.
    Literal,
    /// The literal formula with `C~` in place of `C` on both sides.
    Reversed,
    /// No leading `q` on the sum and weight `q^{(n-j)j}`.
    ReducedWeight,
}

impl AndrewsReading {
    pub const ALL: [AndrewsReading; 3] = [AndrewsReading::Literal, AndrewsReading::Reversed, AndrewsReading::ReducedWeight];

    pub fn name(self) -> &'static str {
        match self {
            AndrewsReading::Literal => "literal",
            AndrewsReading::Reversed => "reversed",
            AndrewsReading::ReducedWeight => "reduced-weight",
        }
    }
}

impl fmt::Display for AndrewsReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AndrewsRow {
    pub n: u32,
    pub reading: AndrewsReading,
    pub lhs: QLaurent,
    pub rhs: QRatFunc,
    pub equal: bool,
}

/// Right-hand side under `reading`, with `cat(i)` supplying the sequence.
pub fn andrews_rhs<F: FnMut(u32) -> QLaurent>(n: u32, reading: AndrewsReading, mut cat: F) -> QRatFunc {
    let n64 = n as i64;
    let head = QRatFunc::new(gauss_binom(2 * n64, n64).shift(n64), q_int(n64 + 1)).expect("[n+1]_q is nonzero");
    let mut sum = QLaurent::zero();
    for j in 0..n {
        let j64 = j as i64;
        let factor = &QLaurent::one() - &QLaurent::monomial_int(1, n64 - j64);
        let weight = match reading {
            AndrewsReading::Literal | AndrewsReading::Reversed => (n64 + 1 - j64) * j64 + 1,
            AndrewsReading::ReducedWeight => (n64 - j64) * j64,
        };
        let term = &(&factor * &gauss_binom(2 * j64 + 1, j64)) * &cat(n - 1 - j);
        sum = sum + term.shift(weight);
    }
    head + QRatFunc::from_laurent(sum)
}

/// One row per `(n, reading)` for `1 <= n <= maxn`.
pub fn andrews_check<C: BallotCache + ?Sized>(maxn: u32, readings: &[AndrewsReading], cache: &mut C) -> Vec<AndrewsRow> {
    let cs: Vec<QLaurent> = (0..=maxn).map(|n| qcatalan(n, cache)).collect();
    let ts: Vec<QLaurent> = (0..=maxn).map(|n| tilde_qcatalan(n, cache)).collect();
    let mut rows = Vec::new();
    for n in 1..=maxn {
        for &reading in readings {
            let seq = if reading == AndrewsReading::Reversed { &ts } else { &cs };
            let lhs = seq[n as usize].clone();
            let rhs = andrews_rhs(n, reading, |i| seq[i as usize].clone());
            let equal = QRatFunc::from_laurent(lhs.clone()) == rhs;
            rows.push(AndrewsRow { n, reading, lhs, rhs, equal });
        }
    }
    rows
}
