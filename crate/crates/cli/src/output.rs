use std::io::Write;

use serde_json::{Map, Value};

use crate::{CliError, Common, Format};

/// A finished report: the JSON document, and the rows used for CSV output.
pub struct Report {
    pub json: Value,
    pub rows: Vec<Value>,
}

impl Report {
    /// Adds `"schema": 1` and the command name ahead of `body`.
    pub fn new(command: &str, body: Value, rows: Vec<Value>) -> Self {
        let mut m = Map::new();
        m.insert("schema".into(), Value::from(1));
        m.insert("command".into(), Value::from(command));
        if let Value::Object(b) = body {
            m.extend(b);
        }
        Report { json: Value::Object(m), rows }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(cell).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

/// Flattens nested objects into dotted column names.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        other => out.push((prefix.to_string(), cell(other))),
    }
}

fn to_csv(rows: &[Value]) -> Result<Vec<u8>, CliError> {
    let flat: Vec<Vec<(String, String)>> = rows
        .iter()
        .map(|r| {
            let mut out = Vec::new();
            flatten("", r, &mut out);
            out
        })
        .collect();
    let mut header: Vec<String> = Vec::new();
    for row in &flat {
        for (k, _) in row {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Io(std::io::Error::other(e));
    w.write_record(&header).map_err(csv_err)?;
    for row in &flat {
        let rec: Vec<&str> = header
            .iter()
            .map(|h| row.iter().find(|(k, _)| k == h).map(|(_, v)| v.as_str()).unwrap_or(""))
            .collect();
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.into_inner().map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))
}

pub fn emit(common: &Common, report: &Report) -> Result<(), CliError> {
    let bytes = match common.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("reports serialize");
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => to_csv(&report.rows)?,
    };
    match &common.output {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().lock().write_all(&bytes)?,
    }
    Ok(())
}
