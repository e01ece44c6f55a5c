use std::io::{self, Write};

use clap::ValueEnum;
use lrcex::families::Check;
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Big integers travel as decimal strings so no JSON reader rounds them.
pub fn num(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl CheckLine {
    pub fn equal(name: impl Into<String>, lhs: &BigUint, rhs: &BigUint) -> Self {
        CheckLine {
            name: name.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass: lhs == rhs,
        }
    }
}

impl From<&Check> for CheckLine {
    fn from(c: &Check) -> Self {
        CheckLine::equal(c.name.clone(), &c.lhs, &c.rhs)
    }
}

/// One command's result: a JSON payload plus an optional table view used by
/// the `table` and `csv` formats.
#[derive(Debug, Default)]
pub struct Output {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub summary: Vec<(String, String)>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub text: Vec<String>,
    pub checks: Vec<CheckLine>,
}

impl Output {
    pub fn new(command: &str) -> Self {
        Output {
            command: command.to_string(),
            result: Value::Null,
            ..Default::default()
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.summary.push((key.to_string(), value.to_string()));
        self
    }

    pub fn check(&mut self, check: CheckLine) -> &mut Self {
        self.checks.push(check);
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self, elapsed_ms: u128) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "pass": c.pass}))
            .collect();
        json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "result": self.result,
            "checks": checks,
            "elapsed_ms": elapsed_ms as u64,
        })
    }

    pub fn render(&self, format: Format, elapsed_ms: u128, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json(elapsed_ms))?;
                writeln!(out)
            }
            Format::Csv => self.render_csv(out),
            Format::Table => self.render_table(out),
        }
    }

    fn render_csv(&self, out: &mut impl Write) -> io::Result<()> {
        if self.header.is_empty() {
            writeln!(out, "key,value")?;
            for (k, v) in &self.summary {
                writeln!(out, "{},{}", csv_field(k), csv_field(v))?;
            }
        } else {
            writeln!(
                out,
                "{}",
                self.header
                    .iter()
                    .map(|h| csv_field(h))
                    .collect::<Vec<_>>()
                    .join(",")
            )?;
            for row in &self.rows {
                writeln!(
                    out,
                    "{}",
                    row.iter()
                        .map(|c| csv_field(c))
                        .collect::<Vec<_>>()
                        .join(",")
                )?;
            }
        }
        Ok(())
    }

    fn render_table(&self, out: &mut impl Write) -> io::Result<()> {
        let width = self
            .summary
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        for (k, v) in &self.summary {
            writeln!(out, "{k:<width$}  {v}")?;
        }
        if !self.header.is_empty() {
            if !self.summary.is_empty() {
                writeln!(out)?;
            }
            let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
            for row in &self.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let fmt_row = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", fmt_row(&self.header))?;
            for row in &self.rows {
                writeln!(out, "{}", fmt_row(row))?;
            }
        }
        for block in &self.text {
            writeln!(out)?;
            write!(out, "{block}")?;
        }
        if !self.checks.is_empty() {
            writeln!(out)?;
            for c in &self.checks {
                let mark = if c.pass { "ok" } else { "MISMATCH" };
                writeln!(out, "check {}: {} vs {} [{mark}]", c.name, c.lhs, c.rhs)?;
            }
        }
        Ok(())
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
