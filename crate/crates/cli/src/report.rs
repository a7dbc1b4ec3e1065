use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;

use crate::config::RunConfig;
use crate::Format;

#[derive(Clone, Debug, Serialize)]
pub struct Conventions {
    pub section: &'static str,
    pub local_points: &'static str,
    pub covers: &'static str,
    pub values: &'static str,
}

pub const CONVENTIONS: Conventions = Conventions {
    section: "lex-least Schreier transversal of G in the free group on C",
    local_points: "(σ, γ) with σ γ^(q⁻¹) σ⁻¹ = γ, up to simultaneous conjugation",
    covers: "geometrically connected G-covers up to isomorphism; the trivial cover is excluded",
    values: "exact: element of Q(ζ) when known; re/im: float projection",
};

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|s| s.to_string()).collect(), rows: vec![] }
    }
    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub conventions: Conventions,
    pub result: serde_json::Value,
    pub passed: bool,
    #[serde(skip)]
    pub table: Option<Table>,
}

pub fn emit(r: &Report, format: Format, out: Option<&Path>) -> Result<()> {
    let mut buf = Vec::new();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut buf, r)?;
            buf.push(b'\n');
        }
        Format::Csv => {
            let Some(t) = &r.table else { bail!("--format csv: `{}` has no tabular output", r.command) };
            let mut w = csv::Writer::from_writer(&mut buf);
            w.write_record(&t.headers)?;
            for row in &t.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    match out {
        Some(p) => std::fs::write(p, &buf).with_context(|| format!("--out: cannot write {}", p.display())),
        None => Ok(std::io::stdout().write_all(&buf)?),
    }
}
