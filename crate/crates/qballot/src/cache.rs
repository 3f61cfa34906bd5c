//! The memo table on disk: `{"schema": "qballot-memo/1", "table": {"n,k": QLaurent}}`.

use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};

use qballot_core::BallotTable;

use crate::error::{FormatError, Result};
use crate::json::{laurent_from_json, laurent_to_json, to_pretty};

pub const SCHEMA: &str = "qballot-memo/1";

pub fn table_to_json(t: &BallotTable) -> Value {
    let map: Map<String, Value> = t.entries().map(|((n, k), v)| (format!("{n},{k}"), laurent_to_json(v))).collect();
    json!({ "schema": SCHEMA, "table": map })
}

/// Parses a dump and checks every entry against the recurrence.
pub fn table_from_json(v: &Value) -> Result<BallotTable> {
    let found = v.get("schema").and_then(Value::as_str).unwrap_or("");
    if found != SCHEMA {
        return Err(FormatError::Schema { found: found.into(), expected: SCHEMA });
    }
    let entries = v
        .get("table")
        .and_then(Value::as_object)
        .ok_or_else(|| FormatError::malformed("memo table", "missing \"table\" object"))?;
    let mut t = BallotTable::new();
    for (key, val) in entries {
        let parsed = key.split_once(',').and_then(|(n, k)| Some((n.trim().parse().ok()?, k.trim().parse().ok()?)));
        let Some((n, k)) = parsed else {
            return Err(FormatError::malformed("memo key", key.clone()));
        };
        t.insert(n, k, laurent_from_json(val)?);
    }
    t.validate().map_err(|(n, k)| FormatError::StaleCache { n, k })?;
    Ok(t)
}

/// A missing file is an empty table.
pub fn load(path: &Path) -> Result<BallotTable> {
    let text = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(BallotTable::new()),
        Err(source) => return Err(FormatError::Io { path: path.into(), source }),
    };
    table_from_json(&serde_json::from_str(&text)?)
}

pub fn save(path: &Path, t: &BallotTable) -> Result<()> {
    fs::write(path, to_pretty(&table_to_json(t))).map_err(|source| FormatError::Io { path: path.into(), source })
}
