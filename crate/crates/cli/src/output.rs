use std::fs;
use std::path::Path;

use serde::Serialize;

/// A CSV table kept as strings so that formatting is fixed before writing.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Table { name: name.into(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write(&self, dir: &Path) -> std::io::Result<()> {
        let mut w = csv::Writer::from_path(dir.join(format!("{}.csv", self.name)))?;
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.flush()
    }
}

/// Shortest round-trip representation; identical across runs and platforms.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// A checked property that did not hold.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub invariant: String,
    pub detail: String,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub tables: Vec<Table>,
    pub summary: serde_json::Map<String, serde_json::Value>,
    pub failures: Vec<Failure>,
    /// Extra JSON files (name, value), e.g. path-collection grids.
    pub documents: Vec<(String, serde_json::Value)>,
}

impl Outcome {
    pub fn check(&mut self, ok: bool, invariant: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(Failure { invariant: invariant.into(), detail: detail() });
        }
    }

    pub fn note<T: Serialize>(&mut self, key: &str, value: T) {
        self.summary.insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn write_json(dir: &Path, name: &str, value: &serde_json::Value) -> std::io::Result<()> {
        let mut s = serde_json::to_string_pretty(value).expect("serializable");
        s.push('\n');
        fs::write(dir.join(name), s)
    }
}
