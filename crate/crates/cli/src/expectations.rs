//! Reference rows compiled in from `data/expectations.toml`.

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

/// The checked-in data file.
pub const DATA: &str = include_str!("../data/expectations.toml");

#[derive(Clone, Debug, Deserialize)]
struct ExpectationFile {
    tables: Vec<TableExpectation>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct TableExpectation {
    pub id: String,
    pub title: String,
    /// Absolute tolerance applied to every quantity of every row.
    pub tol: f64,
    pub rows: Vec<RowExpectation>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct RowExpectation {
    /// The printed table line this row was transcribed from.
    pub source: String,
    pub inputs: BTreeMap<String, i64>,
    pub expected: BTreeMap<String, f64>,
}

impl RowExpectation {
    /// Input `name` as a non-negative integer.
    pub fn input(&self, name: &str) -> Result<usize> {
        let v = *self
            .inputs
            .get(name)
            .with_context(|| format!("row {:?} has no input {name:?}", self.source))?;
        usize::try_from(v).with_context(|| format!("input {name} = {v} is negative"))
    }
}

/// Parses the embedded data file.
pub fn load() -> Result<Vec<TableExpectation>> {
    let file: ExpectationFile = toml::from_str(DATA).context("parsing embedded expectations")?;
    for table in &file.tables {
        if !(table.tol > 0.0) {
            bail!("table {} has a non-positive tolerance", table.id);
        }
        if table.rows.is_empty() {
            bail!("table {} has no rows", table.id);
        }
    }
    Ok(file.tables)
}

/// Normalizes a table selector: an optional `table-` prefix is accepted.
pub fn normalize_id(id: &str) -> &str {
    id.strip_prefix("table-").unwrap_or(id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_file_parses() {
        let tables = load().unwrap();
        assert_eq!(tables.len(), 10);
        let rows: usize = tables.iter().map(|t| t.rows.len()).sum();
        assert_eq!(rows, 62);
    }

    #[test]
    fn sources_repeat_the_row_values() {
        for table in load().unwrap() {
            for row in &table.rows {
                let cells: Vec<&str> = row.source.split('&').collect();
                for value in row.expected.values() {
                    assert!(
                        cells.iter().any(|c| c.parse::<f64>().ok() == Some(*value)),
                        "{} {:?}",
                        table.id,
                        row.source
                    );
                }
                for value in row.inputs.values() {
                    let text = value.to_string();
                    assert!(
                        cells.iter().any(|c| c.trim_start_matches("n^") == text),
                        "{} {:?}",
                        table.id,
                        row.source
                    );
                }
            }
        }
    }

    #[test]
    fn prefix_is_optional() {
        assert_eq!(normalize_id("table-fixed-part"), "fixed-part");
        assert_eq!(normalize_id("log-error"), "log-error");
    }
}
