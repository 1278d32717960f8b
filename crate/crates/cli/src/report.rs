//! Run reports and output rendering.

use std::collections::BTreeMap;
use std::io::Write;

use recon_core::symt::Validity;
use serde::Serialize;
use serde_json::Value;

use crate::error::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Closed,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

/// Machine-readable record of one invocation. Exact integers in `results`
/// are decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub method: Option<Method>,
    pub validity: Option<Validity>,
    pub verdict: Option<Verdict>,
    pub results: Value,
    pub elapsed_us: u64,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            method: None,
            validity: None,
            verdict: None,
            results: Value::Null,
            elapsed_us: 0,
            seed: None,
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }
}

/// Rows for `--csv`.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// The rows as JSON objects keyed by column.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    Value::Object(
                        self.header
                            .iter()
                            .cloned()
                            .zip(row.iter().map(|c| Value::String(c.clone())))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn write_csv(&self, out: impl Write) -> Result<(), Failure> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Whether the run verified what it set out to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Mismatch,
}

/// Everything a command produced, rendered by [`Output::emit`].
pub struct Output {
    pub report: RunReport,
    pub text: Vec<String>,
    pub table: Table,
    /// Plain output is the CSV table rather than `text`.
    pub tabular: bool,
    pub outcome: Outcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Output {
    pub fn emit(&self, format: Format, out: &mut impl Write) -> Result<(), Failure> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.report)?;
                writeln!(out)?;
            }
            Format::Csv => self.table.write_csv(&mut *out)?,
            Format::Text if self.tabular => self.table.write_csv(&mut *out)?,
            Format::Text => {
                for line in &self.text {
                    writeln!(out, "{line}")?;
                }
            }
        }
        Ok(())
    }
}
