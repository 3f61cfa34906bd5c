//! Named, CLI-addressable groups of checks.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;

use super::{newton_polytope, numerator, theorem1_numerator, NewtonPolytope};
use crate::arith::{rat, BigRat, QLaurent, QRatFunc};
use crate::ballot::{
    andrews_check, ballot, catalan, catalan_q1_identity, key_identity_crossing, key_identity_crossing_shifted,
    pointed_path_identity, qballot_paths, tilde_f, tilde_f_paths, tilde_qcatalan, verify_carlitz_convolution,
    AndrewsReading, BallotCache, DEFAULT_PATH_CAP,
};
use crate::csequence::{
    c_difference, c_q1, c_q1_binomial_at, c_shifted_theorem1, c_theorem1, crossing_identity_q1,
    expected_leading_coeff, prop1_value, shifted_crossing_identity_q1, theorem1_coeffs_in_nq, CFamily, Method,
};
use crate::error::{Error, Result};
use crate::qcore::{newton_interpolate, q_factorial, q_int, q_stirling, subst_affine, to_qbinom_basis, XPoly};
use crate::report::CheckResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Prop1,
    Corollary,
    Prop2,
    Thm1,
    Thm2,
    KeyIdentities,
    Q1Identities,
    Carlitz,
    Andrews,
    Stirling,
    Conjecture,
    Polytope,
    Paths,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Prop1,
        Suite::Corollary,
        Suite::Prop2,
        Suite::Thm1,
        Suite::Thm2,
        Suite::KeyIdentities,
        Suite::Q1Identities,
        Suite::Carlitz,
        Suite::Andrews,
        Suite::Stirling,
        Suite::Conjecture,
        Suite::Polytope,
        Suite::Paths,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop1 => "prop1",
            Suite::Corollary => "corollary",
            Suite::Prop2 => "prop2",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::KeyIdentities => "key_identities",
            Suite::Q1Identities => "q1_identities",
            Suite::Carlitz => "carlitz",
            Suite::Andrews => "andrews",
            Suite::Stirling => "stirling",
            Suite::Conjecture => "conjecture",
            Suite::Polytope => "polytope",
            Suite::Paths => "paths",
        }
    }

    /// The range each suite runs to when none is given.
    pub fn default_max_n(self) -> u32 {
        match self {
            Suite::Prop1 | Suite::KeyIdentities | Suite::Thm2 => 8,
            Suite::Corollary | Suite::Prop2 | Suite::Carlitz | Suite::Polytope => 10,
            Suite::Thm1 | Suite::Paths => 12,
            Suite::Q1Identities => 15,
            Suite::Andrews => 6,
            Suite::Stirling => 7,
            Suite::Conjecture => 27,
        }
    }

    /// Independent units of work; each can run on its own cache handle.
    pub fn items(self, maxn: u32) -> Vec<u32> {
        match self {
            Suite::Prop1 | Suite::Corollary | Suite::Stirling | Suite::KeyIdentities => (0..=maxn).collect(),
            Suite::Conjecture | Suite::Polytope => (2..=maxn).collect(),
            _ => vec![maxn],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::UnknownSuite(s.into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Cap on `n + k` for exhaustive path enumeration.
    pub path_cap: u32,
    /// Also try the alternate readings of the Andrews recurrence.
    pub alternate_readings: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { path_cap: DEFAULT_PATH_CAP, alternate_readings: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteStatus {
    Pass,
    Fail,
    /// Results are recorded but not asserted.
    Reported,
}

impl SuiteStatus {
    pub fn name(self) -> &'static str {
        match self {
            SuiteStatus::Pass => "pass",
            SuiteStatus::Fail => "fail",
            SuiteStatus::Reported => "reported",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub status: SuiteStatus,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn new(suite: Suite, results: Vec<CheckResult>) -> Self {
        let status = if suite == Suite::Andrews {
            SuiteStatus::Reported
        } else if results.iter().all(|r| r.pass) {
            SuiteStatus::Pass
        } else {
            SuiteStatus::Fail
        };
        SuiteReport { suite, status, results }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }
}

pub fn run_suite<C: BallotCache + ?Sized>(suite: Suite, maxn: u32, opts: SuiteOptions, cache: &mut C) -> Result<SuiteReport> {
    let mut results = Vec::new();
    for item in suite.items(maxn) {
        results.extend(run_suite_item(suite, item, maxn, opts, cache)?);
    }
    Ok(SuiteReport::new(suite, results))
}

/// One entry of [`Suite::items`].
pub fn run_suite_item<C: BallotCache + ?Sized>(
    suite: Suite,
    item: u32,
    maxn: u32,
    opts: SuiteOptions,
    cache: &mut C,
) -> Result<Vec<CheckResult>> {
    match suite {
        Suite::Prop1 => prop1(item, maxn, opts, cache),
        Suite::Corollary => corollary(item, cache),
        Suite::Prop2 => prop2(maxn, cache),
        Suite::Thm1 => thm1(maxn, cache),
        Suite::Thm2 => thm2(maxn, cache),
        Suite::KeyIdentities => Ok(key_identities(item, cache)),
        Suite::Q1Identities => Ok(q1_identities(maxn)),
        Suite::Carlitz => Ok(verify_carlitz_convolution(maxn + 1, cache)),
        Suite::Andrews => Ok(andrews(maxn, opts, cache)),
        Suite::Stirling => stirling(item, maxn),
        Suite::Conjecture => Ok(conjecture(item, cache)),
        Suite::Polytope => polytope(item, cache),
        Suite::Paths => paths(maxn, opts, cache),
    }
}

fn qint_rf(k: u32) -> QRatFunc {
    QRatFunc::from_laurent(q_int(k as i64))
}

/// `C_{n+1}([k]_q)` from the difference construction against the q-ballot
/// value, taken from path enumeration whenever the cap allows.
fn prop1<C: BallotCache + ?Sized>(n: u32, maxn: u32, opts: SuiteOptions, cache: &mut C) -> Result<Vec<CheckResult>> {
    let fam = c_difference(n + 1)?;
    let c = fam.get(n + 1).expect("built to n + 1");
    let mut out = Vec::new();
    for k in 0..=maxn {
        let (n64, k64) = (n as i64, k as i64);
        let (expected, oracle) = if 2 * n + k <= opts.path_cap {
            let f = qballot_paths(k + n, n, opts.path_cap)?;
            (f.subst_q_inverse().shift(k64 * n64 + n64 * (n64 + 1) / 2), "paths")
        } else {
            (prop1_value(n, k, cache), "recurrence")
        };
        let at = c.eval(&qint_rf(k));
        let r = CheckResult::compare("prop1", n, Some(k), &at, &QRatFunc::from_laurent(expected));
        out.push(if r.pass && oracle == "recurrence" { r.with_detail("oracle: recurrence".into()) } else { r });
    }
    Ok(out)
}

fn corollary<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> Result<Vec<CheckResult>> {
    let fam = c_difference(n + 1)?;
    let next = fam.get(n + 1).expect("built to n + 1");
    let mut out = Vec::new();
    if n >= 1 {
        let cur = fam.get(n).expect("built to n + 1");
        out.push(CheckResult::compare("corollary-zero", n, None, &next.eval(&QRatFunc::zero()), &cur.eval(&QRatFunc::one())));
    }
    let tilde = QRatFunc::from_laurent(tilde_qcatalan(n + 1, cache));
    out.push(CheckResult::compare("corollary-one", n, None, &next.eval(&QRatFunc::one()), &tilde));
    if n == 0 {
        // reversal of the printed C_4(q) against the printed reversal
        let c4 = QLaurent::from_i64s(0, &[1, 1, 2, 3, 3, 3, 1]);
        let expected = QLaurent::from_i64s(0, &[1, 3, 3, 3, 2, 1, 1]);
        out.push(CheckResult::compare("tilde-c4", 4, None, &c4.subst_q_inverse().shift(6), &expected));
        out.push(CheckResult::compare("tilde-c4-table", 4, None, &tilde_qcatalan(4, cache), &expected));
    }
    Ok(out)
}

fn prop2<C: BallotCache + ?Sized>(maxn: u32, cache: &mut C) -> Result<Vec<CheckResult>> {
    let one = rat(1, 1);
    let mut out = Vec::new();
    for n in 0..=maxn {
        let p = c_q1(n);
        let mut bad = None;
        for x in 0..=n + 2 {
            let v = p.eval_numeric(&one, &rat(x as i64, 1))?;
            let w = c_q1_binomial_at(n, x);
            if v != w {
                bad = Some(format!("x = {x}: product form {v}, binomial form {w}"));
                break;
            }
        }
        out.push(match bad {
            None => CheckResult::pass("prop2-binomial", n, None),
            Some(d) => CheckResult::fail("prop2-binomial", n, None, d),
        });
        let collapsed = c_theorem1(n, cache).specialize_q(&one)?;
        out.push(CheckResult::compare("prop2-q-collapse", n, None, &collapsed, &p));
    }
    if maxn >= 2 {
        let lin = |c: i64| XPoly::linear(QRatFunc::from_int(c), QRatFunc::one());
        let c3 = (&lin(1) * &lin(4)).scale(&QRatFunc::constant(rat(1, 2)));
        out.push(CheckResult::compare("prop2-c3", 2, None, &c_q1(2), &c3));
    }
    Ok(out)
}

fn thm1<C: BallotCache + ?Sized>(maxn: u32, cache: &mut C) -> Result<Vec<CheckResult>> {
    let fams: Vec<CFamily> =
        Method::ALL.iter().map(|&m| CFamily::build(m, maxn, cache)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for n in 1..=maxn {
        let polys: Vec<&XPoly> = fams.iter().map(|f| f.get(n).expect("built to maxn")).collect();
        let odd: Vec<&str> = fams
            .iter()
            .zip(&polys)
            .filter(|(_, p)| **p != polys[1])
            .map(|(f, _)| f.method().name())
            .collect();
        out.push(if odd.is_empty() {
            CheckResult::pass("three-methods", n, None)
        } else {
            CheckResult::fail("three-methods", n, None, format!("differs from theorem1: {}", odd.join(", ")))
        });
        let c = polys[1];
        let deg = c.degree().map_or(-1, |d| d as i64);
        out.push(CheckResult::compare("degree", n, None, &deg, &(n as i64 - 1)));
        out.push(CheckResult::compare("leading-coeff", n, None, &c.leading_coeff(), &expected_leading_coeff(n - 1)));
        if n >= 2 {
            let at = -&QRatFunc::q().recip()?;
            out.push(CheckResult::compare("vanishing", n, None, &c.eval(&at), &QRatFunc::zero()));
        }
        let shifted = subst_affine(c, &QRatFunc::q(), &QRatFunc::one());
        out.push(CheckResult::compare("shifted-expansion", n, None, &c_shifted_theorem1(n, cache), &shifted));
        // C_n through its values at [0], [1], ..., [n-1]
        let nodes: Vec<QRatFunc> = (0..n).map(qint_rf).collect();
        let values: Vec<QRatFunc> = (0..n).map(|k| QRatFunc::from_laurent(prop1_value(n - 1, k, cache))).collect();
        out.push(CheckResult::compare("interpolation", n, None, &newton_interpolate(&nodes, &values)?, c));
        let in_nq = theorem1_coeffs_in_nq(n - 1, cache);
        let outside: Vec<String> =
            in_nq.iter().enumerate().filter(|(_, b)| !**b).map(|(j, _)| format!("{j}")).collect();
        let note = if outside.is_empty() {
            String::from("all q-binomial coefficients in N[q]")
        } else {
            format!("q-binomial coefficients outside N[q] at j = {}", outside.join(", "))
        };
        out.push(CheckResult::observe("qbinom-coeffs", n, None, note));
    }
    Ok(out)
}

fn thm2<C: BallotCache + ?Sized>(maxn: u32, cache: &mut C) -> Result<Vec<CheckResult>> {
    let rec = CFamily::build(Method::Recurrence, maxn, cache)?;
    let mut out = Vec::new();
    for n in 1..=maxn {
        out.push(CheckResult::compare("recurrence", n, None, rec.get(n).expect("built"), &c_theorem1(n - 1, cache)));
    }
    for m in 1..=maxn {
        for n in 1..=m {
            out.push(pointed_path_identity(m, n, false, cache));
            let doubled = pointed_path_identity(m, n, true, cache);
            let note = if doubled.pass { "holds" } else { "fails" };
            out.push(CheckResult::observe("pointed-path-doubled", m, Some(n), format!("doubled bracket reading {note}")));
        }
    }
    Ok(out)
}

fn key_identities<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.push(key_identity_crossing(n, k, cache));
        if n >= 1 {
            out.push(key_identity_crossing_shifted(n, k, cache));
        }
    }
    out
}

fn q1_identities(maxn: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for n in 0..=maxn {
        out.push(crossing_identity_q1(n));
        if n >= 1 {
            out.push(shifted_crossing_identity_q1(n));
            out.push(catalan_q1_identity(n));
            // n C_{n+1}(x|1) = (2n-1+x) C_n(x|1) + sum_j (n-j-1) C_j C_{n-j}(x|1)
            let n64 = n as i64;
            let lhs = c_q1(n).scale(&QRatFunc::from_int(n64));
            let mut rhs = &c_q1(n - 1) * &XPoly::linear(QRatFunc::from_int(2 * n64 - 1), QRatFunc::one());
            for j in 0..n.saturating_sub(1) {
                let w = QRatFunc::constant(BigRat::from_integer(catalan(j) * (n - j - 1)));
                rhs = &rhs + &c_q1(n - j - 1).scale(&w);
            }
            out.push(CheckResult::compare("recurrence-q1", n, None, &lhs, &rhs));
        }
    }
    out
}

fn andrews<C: BallotCache + ?Sized>(maxn: u32, opts: SuiteOptions, cache: &mut C) -> Vec<CheckResult> {
    let readings: &[AndrewsReading] =
        if opts.alternate_readings { &AndrewsReading::ALL } else { &[AndrewsReading::Literal] };
    andrews_check(maxn, readings, cache)
        .into_iter()
        .map(|row| {
            let id = format!("andrews-{}", row.reading);
            let detail = format!("lhs = {}; rhs = {}", row.lhs, row.rhs);
            CheckResult { id, n: row.n, k: None, pass: row.equal, detail: Some(detail) }
        })
        .collect()
}

/// `(Delta_q^k x^n)(0) = [k]_q! S_q(n, k)`.
fn stirling(n: u32, maxn: u32) -> Result<Vec<CheckResult>> {
    let xn = XPoly::one().shift_x(n as usize);
    let e = to_qbinom_basis(&xn)?;
    Ok((0..=maxn)
        .map(|k| {
            let lhs = e.coeffs.get(k as usize).cloned().unwrap_or_default();
            let rhs = QRatFunc::from_laurent(&q_factorial(k) * &q_stirling(n, k));
            CheckResult::compare("stirling", n, Some(k), &lhs, &rhs)
        })
        .collect())
}

fn conjecture<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> Vec<CheckResult> {
    let r = theorem1_numerator(n, cache);
    // the same numerator by reducing C_n first and clearing denominators after
    let slow = numerator(n, &c_theorem1(n - 1, cache));
    let routes = if slow == r {
        CheckResult::pass("conj-routes", n, None)
    } else {
        CheckResult::fail("conj-routes", n, None, format!("{} vs {}", r.numerator, slow.numerator))
    };
    let flag = |id: &str, ok: bool| {
        if ok {
            CheckResult::pass(id, n, None)
        } else {
            CheckResult::fail(id, n, None, format!("numerator {}", r.numerator))
        }
    };
    vec![
        flag("conj-polynomial", r.is_polynomial),
        flag("conj-irreducible", r.is_irreducible_fraction),
        flag("conj-positive", r.all_coeffs_positive),
        routes,
    ]
}

/// Slopes are asserted up to this `n` and logged beyond.
const SLOPE_ASSERT_MAX: u32 = 10;
/// Method independence of the polytope is rechecked up to this `n`.
const METHOD_CHECK_MAX: u32 = 8;

fn slopes_text(s: &[Ratio<i64>]) -> String {
    let parts: Vec<String> = s.iter().map(|r| format!("{r}")).collect();
    format!("[{}]", parts.join(", "))
}

fn polytope<C: BallotCache + ?Sized>(n: u32, cache: &mut C) -> Result<Vec<CheckResult>> {
    let r = theorem1_numerator(n, cache);
    let p = newton_polytope(&r)?;
    let mut out = Vec::new();
    let expected: Vec<Ratio<i64>> = (1..n as i64).map(|i| Ratio::from_integer(2 * i - 1)).collect();
    let got = slopes_text(&p.upper_hull_slopes);
    if n <= SLOPE_ASSERT_MAX {
        out.push(if p.upper_hull_slopes == expected {
            CheckResult::pass("polytope-slopes", n, None)
        } else {
            CheckResult::fail("polytope-slopes", n, None, format!("slopes {got}, expected {}", slopes_text(&expected)))
        });
    } else {
        let note = if p.upper_hull_slopes == expected { "odd pattern" } else { "pattern breaks" };
        out.push(CheckResult::observe("polytope-slopes", n, None, format!("slopes {got}: {note}")));
    }
    let top = (n as i64 - 1).pow(2);
    let max_q = r.coefficient_stats.iter().flatten().map(|s| s.1).max();
    let lead_max = r.coefficient_stats.last().copied().flatten().map(|s| s.1);
    let ok = max_q == Some(top) && lead_max == Some(top);
    out.push(if ok {
        CheckResult::pass("max-q-exponent", n, None)
    } else {
        CheckResult::fail("max-q-exponent", n, None, format!("max {max_q:?}, at top x-degree {lead_max:?}, expected {top}"))
    });
    let mins_ok = r.coefficient_stats.iter().enumerate().all(|(k, s)| s.map(|s| s.0) == Some((k * k) as i64));
    let vertices_ok = (0..n as i64).all(|k| p.hull.contains(&(k * k, k)));
    if n <= SLOPE_ASSERT_MAX {
        out.push(if mins_ok && vertices_ok {
            CheckResult::pass("min-q-exponents", n, None)
        } else {
            CheckResult::fail("min-q-exponents", n, None, format!("stats {:?}", r.coefficient_stats))
        });
    }
    out.push(if p.is_convex() && p.contains_all_points() {
        CheckResult::pass("hull-convex", n, None)
    } else {
        CheckResult::fail("hull-convex", n, None, format!("hull {:?}", p.hull))
    });
    if n <= METHOD_CHECK_MAX {
        let fam = c_difference(n)?;
        let q: NewtonPolytope = newton_polytope(&numerator(n, fam.get(n).expect("built to n")))?;
        out.push(if q == p {
            CheckResult::pass("polytope-method-independent", n, None)
        } else {
            CheckResult::fail("polytope-method-independent", n, None, format!("hulls {:?} vs {:?}", p.hull, q.hull))
        });
    }
    Ok(out)
}

/// Recurrence against enumeration, plus the structural facts about the table.
fn paths<C: BallotCache + ?Sized>(maxn: u32, opts: SuiteOptions, cache: &mut C) -> Result<Vec<CheckResult>> {
    if maxn > opts.path_cap {
        return Err(Error::PathCapExceeded { n: maxn, k: 0, steps: maxn, cap: opts.path_cap });
    }
    let mut out = Vec::new();
    for total in 0..=maxn {
        for k in 0..=total / 2 {
            let n = total - k;
            let f = cache.qballot(n, k);
            out.push(CheckResult::compare("paths-qballot", n, Some(k), &f, &qballot_paths(n, k, opts.path_cap)?));
            out.push(CheckResult::compare("paths-tilde", n, Some(k), &tilde_f(n, k, cache)?, &tilde_f_paths(n, k, opts.path_cap)?));
        }
    }
    let one = rat(1, 1);
    for n in 0..=maxn {
        for k in 0..=n {
            let f = cache.qballot(n, k);
            let (n64, k64) = (n as i64, k as i64);
            let deg = (f.min_exp(), f.max_exp());
            let want = (Some(k64), Some(k64 * n64 - k64 * (k64 - 1) / 2));
            let ok = deg == want && f.has_positive_int_coeffs() && f.eval(&one)? == ballot(n, k);
            out.push(if ok {
                CheckResult::pass("table-shape", n, Some(k))
            } else {
                CheckResult::fail("table-shape", n, Some(k), format!("f = {f}"))
            });
        }
        if n >= 1 {
            let lhs = cache.qballot(n, n);
            out.push(CheckResult::compare("boundary", n, None, &lhs, &cache.qballot(n, n - 1).shift(1)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballot::BallotTable;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("nosuch".parse::<Suite>(), Err(Error::UnknownSuite("nosuch".into())));
    }

    #[test]
    fn small_runs_pass() {
        let mut t = BallotTable::new();
        for s in Suite::ALL {
            if s == Suite::Andrews {
                continue;
            }
            let r = run_suite(s, 4, SuiteOptions::default(), &mut t).unwrap();
            assert_eq!(r.status, SuiteStatus::Pass, "{s}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn andrews_is_reported() {
        let mut t = BallotTable::new();
        let r = run_suite(Suite::Andrews, 5, SuiteOptions::default(), &mut t).unwrap();
        assert_eq!(r.status, SuiteStatus::Reported);
        assert!(r.results.iter().any(|c| c.id == "andrews-literal" && !c.pass));
        assert!(r.results.iter().all(|c| c.id == "andrews-literal"));
        let opts = SuiteOptions { alternate_readings: true, ..Default::default() };
        let r = run_suite(Suite::Andrews, 5, opts, &mut t).unwrap();
        assert!(r.results.iter().filter(|c| c.id == "andrews-reduced-weight").all(|c| c.pass));
    }

    #[test]
    fn path_cap_is_respected() {
        let mut t = BallotTable::new();
        let opts = SuiteOptions { path_cap: 6, ..Default::default() };
        assert!(matches!(run_suite(Suite::Paths, 7, opts, &mut t), Err(Error::PathCapExceeded { .. })));
        let r = run_suite(Suite::Prop1, 3, opts, &mut t).unwrap();
        assert_eq!(r.status, SuiteStatus::Pass);
        assert!(r.results.iter().any(|c| c.detail.as_deref() == Some("oracle: recurrence")));
    }
}
