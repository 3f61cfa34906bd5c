//! JSON forms of every value type. Rationals travel as `"num/den"` strings
//! so arbitrary precision survives.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use qballot_core::analysis::{NewtonPolytope, SuiteReport};
use qballot_core::report::CheckResult;
use qballot_core::{BigRat, QBinomExpansion, QLaurent, QRatFunc, XPoly};

use crate::error::{FormatError, Result};

pub fn rat_to_string(r: &BigRat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rat_from_str(s: &str) -> Result<BigRat> {
    let bad = || FormatError::malformed("rational", s);
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRat::new(n, d))
}

/// `[[exp, "num/den"], ...]`, ascending in the exponent.
pub fn laurent_to_json(p: &QLaurent) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, rat_to_string(&c)])).collect())
}

pub fn laurent_from_json(v: &Value) -> Result<QLaurent> {
    let terms = v.as_array().ok_or_else(|| FormatError::malformed("Laurent polynomial", v.to_string()))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let pair = t.as_array().filter(|p| p.len() == 2);
        let (e, c) = match pair.map(|p| (p[0].as_i64(), p[1].as_str())) {
            Some((Some(e), Some(c))) => (e, c),
            _ => return Err(FormatError::malformed("Laurent term", t.to_string())),
        };
        out.push((e, rat_from_str(c)?));
    }
    Ok(QLaurent::from_terms(out))
}

pub fn ratfunc_to_json(r: &QRatFunc) -> Value {
    json!({ "num": laurent_to_json(r.numer()), "den": laurent_to_json(r.denom()) })
}

pub fn ratfunc_from_json(v: &Value) -> Result<QRatFunc> {
    let (Some(num), Some(den)) = (v.get("num"), v.get("den")) else {
        return Err(FormatError::malformed("rational function", v.to_string()));
    };
    Ok(QRatFunc::new(laurent_from_json(num)?, laurent_from_json(den)?)?)
}

fn coeffs_to_json(cs: &[QRatFunc]) -> Value {
    Value::Array(cs.iter().map(ratfunc_to_json).collect())
}

fn coeffs_from_json(v: &Value) -> Result<Vec<QRatFunc>> {
    v.get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::malformed("coefficient list", v.to_string()))?
        .iter()
        .map(ratfunc_from_json)
        .collect()
}

pub fn xpoly_to_json(p: &XPoly) -> Value {
    json!({ "coeffs": coeffs_to_json(p.coeffs()) })
}

pub fn xpoly_from_json(v: &Value) -> Result<XPoly> {
    Ok(XPoly::from_coeffs(coeffs_from_json(v)?))
}

pub fn qbinom_to_json(e: &QBinomExpansion) -> Value {
    json!({ "basis": "qbinom", "coeffs": coeffs_to_json(&e.coeffs) })
}

pub fn qbinom_from_json(v: &Value) -> Result<QBinomExpansion> {
    if v.get("basis").and_then(Value::as_str) != Some("qbinom") {
        return Err(FormatError::malformed("q-binomial expansion", "missing \"basis\": \"qbinom\""));
    }
    Ok(QBinomExpansion::new(coeffs_from_json(v)?))
}

/// `{"n": n, "basis": "monomial" | "qbinom", "coeffs": [...]}`.
pub fn cx_to_json(n: u32, basis: &str, coeffs: &[QRatFunc]) -> Value {
    json!({ "n": n, "basis": basis, "coeffs": coeffs_to_json(coeffs) })
}

pub fn check_to_json(c: &CheckResult) -> Value {
    json!({ "id": c.id, "n": c.n, "k": c.k, "pass": c.pass, "detail": c.detail })
}

pub fn report_to_json(r: &SuiteReport) -> Value {
    json!({
        "suite": r.suite.name(),
        "status": r.status.name(),
        "results": r.results.iter().map(check_to_json).collect::<Vec<_>>(),
    })
}

fn points(ps: &[(i64, i64)]) -> Value {
    Value::Array(ps.iter().map(|&(a, b)| json!([a, b])).collect())
}

/// Points and hulls as `[q-exponent, x-exponent]` pairs; slopes as strings.
pub fn polytope_to_json(n: u32, p: &NewtonPolytope) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), json!(n));
    m.insert("points".into(), points(&p.points));
    m.insert("hull".into(), points(&p.hull));
    m.insert("upper_hull".into(), points(&p.upper_hull));
    m.insert("lower_hull".into(), points(&p.lower_hull));
    let slopes: Vec<String> = p.upper_hull_slopes.iter().map(|s| s.to_string()).collect();
    m.insert("upper_hull_slopes".into(), json!(slopes));
    Value::Object(m)
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}
