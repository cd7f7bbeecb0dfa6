use serde::Serialize;
use serde_json::Value;
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    /// Left-aligned columns padded to the widest cell.
    pub fn render(&self) -> String {
        let width = |c: usize| {
            std::iter::once(&self.header)
                .chain(&self.rows)
                .map(|r| r.get(c).map_or(0, |s| s.chars().count()))
                .max()
                .unwrap_or(0)
        };
        let widths: Vec<usize> = (0..self.header.len()).map(width).collect();
        let line = |r: &[String]| {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                .collect();
            cells.join("  ").trim_end().to_string()
        };
        let mut out = line(&self.header);
        out.push('\n');
        out.push_str(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "));
        for r in &self.rows {
            out.push('\n');
            out.push_str(&line(r));
        }
        out
    }
}

/// One command's output in all three formats.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
    /// Used for CSV; otherwise the JSON is flattened to `key,value` rows.
    pub table: Option<Table>,
    /// Preformatted CSV, taking precedence over `table`.
    pub raw_csv: Option<String>,
    /// A verification step failed; exit code 2.
    pub failed: bool,
}

impl Report {
    pub fn new<T: Serialize>(value: &T, text: String) -> Self {
        Report { json: serde_json::to_value(value).expect("reports serialize"), text, table: None, raw_csv: None, failed: false }
    }

    pub fn with_table(mut self, t: Table) -> Self {
        self.table = Some(t);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => {
                if let Some(raw) = &self.raw_csv {
                    return raw.clone();
                }
                let t = match &self.table {
                    Some(t) => t.clone(),
                    None => flatten(&self.json),
                };
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&t.header).expect("in-memory csv");
                for r in &t.rows {
                    w.write_record(r).expect("in-memory csv");
                }
                String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
            }
        }
    }
}

/// `key,value` rows with dotted paths.
pub fn flatten(v: &Value) -> Table {
    fn walk(prefix: &str, v: &Value, t: &mut Table) {
        let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(m) => m.iter().for_each(|(k, x)| walk(&join(k), x, t)),
            Value::Array(a) => a.iter().enumerate().for_each(|(k, x)| walk(&join(&k.to_string()), x, t)),
            Value::String(s) => t.push(vec![prefix.to_string(), s.clone()]),
            Value::Null => t.push(vec![prefix.to_string(), String::new()]),
            other => t.push(vec![prefix.to_string(), other.to_string()]),
        }
    }
    let mut t = Table::new(&["key", "value"]);
    walk("", v, &mut t);
    t
}

/// Short float form for text output.
pub fn g(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let a = x.abs();
    if !(1e-4..1e6).contains(&a) {
        return format!("{x:.4e}");
    }
    let digits = (6 - a.log10().floor() as i32 - 1).clamp(0, 8) as usize;
    let s = format!("{x:.digits$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn kv(lines: &[(&str, String)]) -> String {
    let w = lines.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in lines {
        let _ = writeln!(s, "{k}{}  {v}", " ".repeat(w - k.chars().count()));
    }
    s
}
