//! Report rendering. A report is a JSON object plus an optional table used by
//! the CSV and table formats.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Rows {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub json: Map<String, Value>,
    pub rows: Option<Rows>,
    /// False when a requested check failed; maps to a nonzero exit code.
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str, config: Value) -> Self {
        let mut json = Map::new();
        json.insert("tool".into(), Value::from("matsuo"));
        json.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
        json.insert("command".into(), Value::from(command));
        json.insert("config".into(), config);
        Report {
            json,
            rows: None,
            passed: true,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.json.insert(key.into(), value.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn scalar_fields(&self) -> Vec<(&String, String)> {
        self.json
            .iter()
            .filter(|(k, v)| k.as_str() != "config" && !v.is_object() && !v.is_array())
            .map(|(k, v)| (k, scalar_text(v)))
            .collect()
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let written = match &self.rows {
            Some(rows) => std::iter::once(w.write_record(&rows.header))
                .chain(rows.rows.iter().map(|r| w.write_record(r)))
                .collect::<Result<(), _>>(),
            None => {
                let fields = self.scalar_fields();
                w.write_record(fields.iter().map(|(k, _)| k.as_str()))
                    .and_then(|_| w.write_record(fields.iter().map(|(_, v)| v.as_str())))
            }
        };
        written.expect("writing to memory cannot fail");
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 input")
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        let width = self.json.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in &self.json {
            if self.rows.is_some() && v.is_array() {
                continue;
            }
            let text = if v.is_object() || v.is_array() {
                serde_json::to_string(v).expect("JSON values serialize")
            } else {
                scalar_text(v)
            };
            let _ = writeln!(out, "{k:<width$}  {text}");
        }
        if let Some(rows) = &self.rows {
            let mut widths: Vec<usize> = rows.header.iter().map(|h| h.len()).collect();
            for row in &rows.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            out.push('\n');
            let line = |cells: Vec<&str>| -> String {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(rows.header.clone()));
            for row in &rows.rows {
                let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
            }
        }
        out
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}
