use std::io::Write;

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Rows of strings under a header.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory csv");
        for r in &self.rows {
            w.write_record(r).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
    }

    /// Space aligned columns.
    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for r in &self.rows {
            for (i, c) in r.iter().enumerate() {
                widths[i] = widths[i].max(c.len());
            }
        }
        let line = |cells: &[String]| {
            let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            parts.join("  ").trim_end().to_string() + "\n"
        };
        let mut s = line(&self.header);
        for r in &self.rows {
            s += &line(r);
        }
        s
    }

    /// Array of objects keyed by the header.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let m: Map<String, Value> =
                        self.header.iter().cloned().zip(r.iter().map(|c| Value::String(c.clone()))).collect();
                    Value::Object(m)
                })
                .collect(),
        )
    }
}

/// Result of one command before it is rendered.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub payload: Value,
    pub table: Table,
    pub text: String,
    pub failed: bool,
}

pub struct Meta {
    pub precision: usize,
    pub elapsed_ms: Option<f64>,
}

pub fn render(report: &Report, format: Format, meta: &Meta) -> String {
    match format {
        Format::Json => {
            let mut metadata = json!({
                "tool": "sinesum",
                "version": env!("CARGO_PKG_VERSION"),
                "precision": meta.precision,
            });
            if let Some(t) = meta.elapsed_ms {
                metadata["elapsed_ms"] = json!(t);
            }
            let doc = json!({
                "command": report.command,
                "metadata": metadata,
                "payload": report.payload,
            });
            serde_json::to_string_pretty(&doc).expect("json value") + "\n"
        }
        Format::Csv => report.table.to_csv(),
        Format::Text => {
            let mut s = report.text.clone();
            if let Some(t) = meta.elapsed_ms {
                s += &format!("elapsed: {t:.3} ms\n");
            }
            s
        }
    }
}

pub fn write_all(w: &mut dyn Write, s: &str) -> std::io::Result<()> {
    w.write_all(s.as_bytes())?;
    w.flush()
}
