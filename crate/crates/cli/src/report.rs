//! Table comparison reports in text and JSON form.

use std::collections::BTreeMap;
use std::fmt::Write;

use anyhow::{bail, Result};
use serde::Serialize;

use crate::expectations::TableExpectation;
use crate::format;
use crate::tables;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RowReport {
    pub inputs: BTreeMap<String, i64>,
    pub quantity: String,
    pub got: f64,
    pub expected: f64,
    pub tol: f64,
    pub pass: bool,
    pub source: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    fn add(&mut self, other: Summary) {
        self.checked += other.checked;
        self.passed += other.passed;
        self.failed += other.failed;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableReport {
    pub table_id: String,
    pub title: String,
    pub rows: Vec<RowReport>,
    pub summary: Summary,
}

/// Recomputes `table` and compares every expected quantity.
pub fn verify_table(table: &TableExpectation) -> Result<TableReport> {
    let Some(names) = tables::quantities(&table.id) else {
        bail!("unknown table {:?}", table.id);
    };
    let computed = tables::compute(table)?;
    let mut rows = Vec::new();
    let mut summary = Summary::default();
    for (row, values) in table.rows.iter().zip(computed) {
        for key in row.expected.keys() {
            if !names.contains(&key.as_str()) {
                bail!("table {} does not produce {key:?}", table.id);
            }
        }
        for (name, got) in names.iter().zip(values) {
            let Some(&expected) = row.expected.get(*name) else {
                continue;
            };
            let pass = (got - expected).abs() <= table.tol;
            summary.checked += 1;
            if pass {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
            rows.push(RowReport {
                inputs: row.inputs.clone(),
                quantity: (*name).to_owned(),
                got: format::rounded(got),
                expected,
                tol: table.tol,
                pass,
                source: row.source.clone(),
            });
        }
    }
    Ok(TableReport {
        table_id: table.id.clone(),
        title: table.title.clone(),
        rows,
        summary,
    })
}

/// Totals over several tables.
pub fn total(reports: &[TableReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        s.add(r.summary);
    }
    s
}

/// Human-readable rendering, one line per compared quantity.
pub fn render_text(reports: &[TableReport]) -> String {
    let mut out = String::new();
    for report in reports {
        let _ = writeln!(out, "{}: {}", report.table_id, report.title);
        for row in &report.rows {
            let inputs: Vec<String> = row.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "  {:<16} {:<10} got {:>20}  expected {:>16}  tol {:e}  {}",
                inputs.join(" "),
                row.quantity,
                format::float(row.got),
                format::float(row.expected),
                row.tol,
                if row.pass { "PASS" } else { "FAIL" }
            );
        }
        let s = report.summary;
        let _ = writeln!(out, "  {}/{} pass\n", s.passed, s.checked);
    }
    if reports.len() > 1 {
        let s = total(reports);
        let _ = writeln!(out, "total: {}/{} pass", s.passed, s.checked);
    }
    out
}
