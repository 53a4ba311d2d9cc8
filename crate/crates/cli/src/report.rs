use std::fmt::Write as _;

use serde_json::Value;

use crate::args::Format;
use crate::error::CliError;

/// How a command finished, mapped to the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Complete,
    BudgetExhausted,
    CheckFailed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Complete => 0,
            Status::BudgetExhausted => 2,
            Status::CheckFailed => 3,
        }
    }
}

pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub struct Report {
    pub json: Value,
    pub table: Option<Table>,
    /// Text rendering; derived from `json` when absent.
    pub text: Option<String>,
    pub default_format: Format,
    pub status: Status,
}

impl Report {
    pub fn json(json: Value, status: Status) -> Self {
        Self {
            json,
            table: None,
            text: None,
            default_format: Format::Json,
            status,
        }
    }

    pub fn render(&self, format: Option<Format>) -> Result<String, CliError> {
        match format.unwrap_or(self.default_format) {
            Format::Json => {
                Ok(serde_json::to_string_pretty(&self.json).expect("json value") + "\n")
            }
            Format::Csv => {
                let table = self.table.as_ref().ok_or_else(|| {
                    CliError::Usage(
                        "csv output is only available for tabular reports (conjectures, sweep)"
                            .into(),
                    )
                })?;
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&table.headers)?;
                for row in &table.rows {
                    w.write_record(row)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
                Ok(String::from_utf8(bytes).expect("csv is utf-8"))
            }
            Format::Text => Ok(match (&self.text, &self.table) {
                (Some(text), _) => text.clone(),
                (None, Some(table)) => aligned(table) + &flat_text(&self.json, &["rows"]),
                (None, None) => flat_text(&self.json, &[]),
            }),
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(table: &Table) -> String {
    let mut widths: Vec<usize> = table.headers.iter().map(|h| h.chars().count()).collect();
    for row in &table.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(table.headers.clone(), &mut out);
    for row in &table.rows {
        line(row.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

/// `key: value` lines for a JSON object, skipping `skip`; nested values stay
/// compact JSON.
pub fn flat_text(json: &Value, skip: &[&str]) -> String {
    let mut out = String::new();
    match json {
        Value::Object(map) => {
            for (k, v) in map.iter().filter(|(k, _)| !skip.contains(&k.as_str())) {
                let _ = writeln!(out, "{k}: {}", scalar(v));
            }
        }
        other => {
            let _ = writeln!(out, "{}", scalar(other));
        }
    }
    out
}

pub fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}
