use std::io::Write;
use std::path::Path;

use bcshift_core::Complex64;
use serde::Serialize;

use crate::config::Format;
use crate::error::CliError;

/// A complex number as `[re, im]`.
pub type Pair = [f64; 2];

pub fn pair(z: Complex64) -> Pair {
    [z.re, z.im]
}

/// Rows for the CSV form of a command's result.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push<I: IntoIterator<Item = String>>(&mut self, row: I) {
        self.rows.push(row.into_iter().collect());
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::usage(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// What a command produced. `status` is the exit code of a run that did
/// not error: 0, or 1 for a failed verification.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub json: String,
    pub table: Table,
    pub status: i32,
}

impl Rendered {
    pub fn new<T: Serialize>(value: &T, table: Table, status: i32) -> Result<Self, CliError> {
        let mut json = serde_json::to_string_pretty(value)?;
        json.push('\n');
        Ok(Rendered { json, table, status })
    }

    pub fn text(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(self.json.clone()),
            Format::Csv => self.table.to_csv(),
        }
    }
}

/// Writes to `path`, or to stdout without one.
pub fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

/// Shortest round-trip form, switching to exponent notation for very small
/// or very large magnitudes.
pub fn num(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && a.is_finite() && !(1e-4..1e15).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_has_header_row() {
        let mut t = Table::new(&["xi", "log_abs"]);
        t.push([num(5.0), num(-1.25)]);
        assert_eq!(t.to_csv().unwrap(), "xi,log_abs\n5,-1.25\n");
        assert_eq!(num(1.5e-9), "1.5e-9");
        assert_eq!(num(0.0), "0");
    }
}
