//! Report rendering: a human table, JSON, or CSV.

use std::io::Write;

use anyhow::{Context, Result};
use serde_json::Value;

use crate::config::Format;

/// Process exit status shared by all commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Affirmative,
    Negative,
    /// Neither answer could be established (e.g. a search budget ran out).
    Undetermined,
}

impl Verdict {
    pub fn code(self) -> u8 {
        match self {
            Verdict::Affirmative => 0,
            Verdict::Negative => 1,
            Verdict::Undetermined => 2,
        }
    }
}

pub struct Report {
    /// Machine form: one JSON document.
    pub json: Value,
    /// Rows for CSV output; each is a flat JSON object.
    pub rows: Vec<Value>,
    /// Human-readable form for standard output.
    pub table: String,
    pub verdict: Verdict,
}

/// Rounds every float in `v` to 12 significant digits so that reports are
/// byte-stable.
pub fn round_floats(v: &mut Value) {
    match v {
        Value::Number(num) if num.is_f64() => {
            let x = oddcrit::theorems::round_report(num.as_f64().unwrap_or_default());
            if let Some(r) = serde_json::Number::from_f64(x) {
                *num = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn to_csv(rows: &[Value]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(Value::Object(first)) = rows.first() {
        let header: Vec<&String> = first.keys().collect();
        w.write_record(&header)?;
        for row in rows {
            let record: Vec<String> = header
                .iter()
                .map(|k| row.get(k.as_str()).map(cell).unwrap_or_default())
                .collect();
            w.write_record(&record)?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn render(report: &Report, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json)?;
            s.push('\n');
            s
        }
        Format::Csv => to_csv(&report.rows)?,
    })
}

/// Writes the machine report to `path`.
pub fn write_file(path: &std::path::Path, text: &str) -> Result<()> {
    let mut f =
        std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    f.write_all(text.as_bytes())
        .with_context(|| format!("writing {}", path.display()))
}

/// Aligned `key  value` lines.
pub fn key_value_table(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

/// Column table with a header row.
pub fn grid_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", parts.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn show(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.10}")).unwrap_or_else(|| "-".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rounding_is_recursive() {
        let mut v = json!({"a": [2.732050807568877, 1], "b": {"c": 0.1 + 0.2}});
        round_floats(&mut v);
        assert_eq!(v, json!({"a": [2.73205080757, 1], "b": {"c": 0.3}}));
    }

    #[test]
    fn csv_quotes_and_flattens() {
        let rows = vec![json!({"id": "a,b", "w": [1, 2], "x": null})];
        assert_eq!(to_csv(&rows).unwrap(), "id,w,x\n\"a,b\",\"[1,2]\",\n");
    }

    #[test]
    fn tables_align() {
        let t = key_value_table(&[("n", "5".into()), ("edges", "10".into())]);
        assert_eq!(t, "n      5\nedges  10\n");
        let g = grid_table(&["id", "x"], &[vec!["long-id".into(), "1".into()]]);
        assert_eq!(g, "id       x\nlong-id  1\n");
    }
}
