//! Triangles of ballot numbers (table 1) and q-ballot numbers (table 2):
//! rows `n`, columns `k`, `0 <= k <= n`.

use std::io::Write;

use serde_json::{json, Value};

use qballot_core::ballot::ballot;
use qballot_core::{BallotCache, QLaurent};

use crate::error::{FormatError, Result};
use crate::json::laurent_to_json;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(num_bigint::BigInt),
    Poly(QLaurent),
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Poly(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub which: u8,
    pub max_n: u32,
    /// `rows[n][k]`.
    pub rows: Vec<Vec<Cell>>,
}

/// `which` is 1 for `f(n,k)` and 2 for `f(n,k|q)`.
pub fn build<C: BallotCache + ?Sized>(which: u8, max_n: u32, cache: &mut C) -> Result<Table> {
    let cell = |n: u32, k: u32, cache: &mut C| match which {
        1 => Ok(Cell::Int(ballot(n, k).to_integer())),
        2 => Ok(Cell::Poly(cache.qballot(n, k))),
        _ => Err(FormatError::malformed("table number", format!("{which} (expected 1 or 2)"))),
    };
    let rows = (0..=max_n).map(|n| (0..=n).map(|k| cell(n, k, cache)).collect()).collect::<Result<_>>()?;
    Ok(Table { which, max_n, rows })
}

impl Table {
    pub fn render_text(&self) -> String {
        let cols = self.max_n as usize + 1;
        let mut width = vec![0usize; cols + 1];
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::from("n\\k")];
        header.extend((0..cols).map(|k| k.to_string()));
        grid.push(header);
        for (n, row) in self.rows.iter().enumerate() {
            let mut line = vec![n.to_string()];
            line.extend(row.iter().map(Cell::to_string));
            grid.push(line);
        }
        for line in &grid {
            for (i, c) in line.iter().enumerate() {
                width[i] = width[i].max(c.len());
            }
        }
        let mut out = String::new();
        for line in &grid {
            let mut s = String::new();
            for (i, c) in line.iter().enumerate() {
                s.push_str(&format!("{c:<w$}", w = width[i]));
                s.push_str(if i == 0 { " | " } else { "  " });
            }
            out.push_str(s.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| {
                row.iter().enumerate().map(move |(k, c)| {
                    let value = match c {
                        Cell::Int(v) => json!(v.to_string()),
                        Cell::Poly(p) => laurent_to_json(p),
                    };
                    json!({ "n": n, "k": k, "value": value })
                })
            })
            .collect();
        json!({ "table": self.which, "max_n": self.max_n, "entries": entries })
    }

    /// Columns `n,k,polynomial`.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wr = csv::Writer::from_writer(w);
        wr.write_record(["n", "k", "polynomial"])?;
        for (n, row) in self.rows.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                wr.write_record([n.to_string(), k.to_string(), c.to_string()])?;
            }
        }
        wr.flush().map_err(|e| FormatError::Csv(e.into()))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qballot_core::BallotTable;

    #[test]
    fn smallest_tables() {
        let t = build(1, 0, &mut BallotTable::new()).unwrap();
        assert_eq!(t.render_text(), "n\\k | 0\n0   | 1\n");
        let t = build(2, 2, &mut BallotTable::new()).unwrap();
        assert_eq!(t.rows[2][2], Cell::Poly(QLaurent::from_i64s(2, &[1, 1])));
        assert!(build(3, 2, &mut BallotTable::new()).is_err());
    }

    #[test]
    fn csv_has_one_row_per_entry() {
        let t = build(1, 3, &mut BallotTable::new()).unwrap();
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + 10);
        assert_eq!(text.lines().last(), Some("3,3,5"));
    }
}
