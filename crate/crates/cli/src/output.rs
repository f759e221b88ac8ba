//! Tabular output as CSV, TSV or JSON.

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Tsv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    /// Already rounded; the same text is written to every format.
    Num(String),
    Text(String),
}

impl Cell {
    /// Six significant digits.
    pub fn score(x: f64) -> Cell {
        let rounded: f64 = format!("{x:.5e}").parse().unwrap();
        Cell::Num(if rounded != 0.0 && rounded.abs() < 1e-4 {
            format!("{rounded:e}")
        } else {
            format!("{rounded}")
        })
    }

    pub fn fixed4(x: f64) -> Cell {
        Cell::Num(format!("{x:.4}"))
    }

    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(s) | Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Num(s) => json!(s.parse::<f64>().unwrap()),
            Cell::Text(s) => json!(s),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn delimited(&self, sep: char, out: &mut String) {
        let quote = |s: &str| {
            if sep == ',' && (s.contains(',') || s.contains('"') || s.contains('\n')) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let join = |cells: Vec<String>| cells.join(&sep.to_string());
        out.push_str(&join(self.header.iter().map(|h| quote(h)).collect()));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&join(row.iter().map(|c| quote(&c.text())).collect()));
            out.push('\n');
        }
    }

    fn json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .header
                        .iter()
                        .cloned()
                        .zip(row.iter().map(Cell::json))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

/// Everything one command writes to stdout.
pub struct Emission {
    pub graph: String,
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub table: Table,
    /// Extra table appended after a blank line (CSV/TSV) or under
    /// `plot_series` (JSON).
    pub plot: Option<Table>,
}

impl Emission {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv | OutputFormat::Tsv => {
                let sep = if format == OutputFormat::Csv {
                    ','
                } else {
                    '\t'
                };
                let mut out = String::new();
                self.table.delimited(sep, &mut out);
                if let Some(plot) = &self.plot {
                    out.push('\n');
                    plot.delimited(sep, &mut out);
                }
                out
            }
            OutputFormat::Json => {
                let mut obj = Map::new();
                obj.insert("graph".into(), json!(self.graph));
                obj.insert("command".into(), json!(self.command));
                obj.insert("params".into(), Value::Object(self.params.clone()));
                obj.insert("rows".into(), self.table.json_rows());
                if let Some(plot) = &self.plot {
                    obj.insert("plot_series".into(), plot.json_rows());
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(obj)).unwrap();
                s.push('\n');
                s
            }
        }
    }
}
