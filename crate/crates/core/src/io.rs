//! CSV ingestion and output files.
//!
//! Series files have the header `k,estimator_tag,value,defined`. Values use
//! the shortest decimal form that parses back to the same `f64`; undefined
//! points have an empty value and `defined = 0`. All output is UTF-8 with LF
//! line endings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::SystemTime;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::estimators::EstimateSeries;
use crate::mindex::{MFunction, MIndexDiagnostic};
use crate::sample::RawSample;

/// Column selector: 0-based index or header name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Column {
    Index(usize),
    Name(String),
}

impl Column {
    /// Digits select by index, anything else by name.
    pub fn parse(s: &str) -> Self {
        match s.parse::<usize>() {
            Ok(i) => Column::Index(i),
            Err(_) => Column::Name(s.to_string()),
        }
    }
}

impl Default for Column {
    fn default() -> Self {
        Column::Index(0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DatasetSpec {
    pub path: PathBuf,
    pub column: Column,
    pub delimiter: u8,
    /// `None` detects a header from a non-numeric first row.
    pub header: Option<bool>,
    /// Keep only values `>= threshold`.
    pub threshold: Option<f64>,
}

impl DatasetSpec {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self {
            path: path.into(),
            column: Column::default(),
            delimiter: b',',
            header: None,
            threshold: None,
        }
    }
}

/// Ingested data with row counts.
#[derive(Debug, Clone, PartialEq)]
pub struct Ingested {
    pub sample: RawSample,
    /// Data rows read, header excluded.
    pub rows: usize,
    /// Values kept after the threshold.
    pub kept: usize,
}

struct Row {
    line: u64,
    fields: Vec<String>,
}

fn read_rows(path: &Path, delimiter: u8) -> Result<Vec<Row>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .delimiter(delimiter)
        .trim(csv::Trim::All)
        .from_path(path)?;
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            Error::Parse {
                line,
                message: e.to_string(),
            }
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        rows.push(Row {
            line,
            fields: record.iter().map(str::to_string).collect(),
        });
    }
    Ok(rows)
}

fn parse_number(s: &str, line: u64) -> Result<f64> {
    s.parse::<f64>().map_err(|_| Error::Parse {
        line,
        message: format!("not a number: {s:?}"),
    })
}

/// Splits off a header row and resolves the column to an index.
fn resolve_column(rows: &[Row], column: &Column, header: Option<bool>) -> Result<(usize, bool)> {
    let first = rows.first();
    let has_header = match header {
        Some(h) => h,
        None => match (first, column) {
            (None, _) => false,
            (Some(_), Column::Name(_)) => true,
            (Some(row), Column::Index(i)) => row
                .fields
                .get(*i)
                .is_some_and(|f| f.parse::<f64>().is_err()),
        },
    };
    let index = match column {
        Column::Index(i) => *i,
        Column::Name(name) => {
            let row = first.filter(|_| has_header).ok_or_else(|| {
                Error::InvalidParameter(format!("column {name:?} needs a header row"))
            })?;
            row.fields
                .iter()
                .position(|f| f == name)
                .ok_or_else(|| Error::Parse {
                    line: row.line,
                    message: format!("no column named {name:?}"),
                })?
        }
    };
    Ok((index, has_header))
}

/// Reads one column of positive numbers, optionally keeping only values at
/// or above a threshold.
pub fn ingest_csv(spec: &DatasetSpec) -> Result<Ingested> {
    if let Some(t) = spec.threshold {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "threshold must be > 0, got {t}"
            )));
        }
    }
    let rows = read_rows(&spec.path, spec.delimiter)?;
    let (index, has_header) = resolve_column(&rows, &spec.column, spec.header)?;
    let data = &rows[usize::from(has_header).min(rows.len())..];
    let mut values = Vec::with_capacity(data.len());
    for row in data {
        let field = row.fields.get(index).ok_or_else(|| Error::Parse {
            line: row.line,
            message: format!(
                "row has {} fields, column {index} missing",
                row.fields.len()
            ),
        })?;
        let v = parse_number(field, row.line)?;
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::NonPositiveValue {
                value: v,
                line: Some(row.line),
            });
        }
        if spec.threshold.is_none_or(|t| v >= t) {
            values.push(v);
        }
    }
    let kept = values.len();
    if kept < 2 {
        return Err(Error::EmptyAfterFilter { kept });
    }
    Ok(Ingested {
        sample: RawSample::new(values)?,
        rows: data.len(),
        kept,
    })
}

/// Two-column `(x, U(x))` table read as an [`MFunction`] defined on its `x`
/// values. Returns the function and the sorted x values.
pub fn read_tabulated_function(
    path: &Path,
    delimiter: u8,
    header: Option<bool>,
) -> Result<(MFunction, Vec<f64>)> {
    let rows = read_rows(path, delimiter)?;
    let (_, has_header) = resolve_column(&rows, &Column::Index(0), header)?;
    let mut table = BTreeMap::new();
    for row in &rows[usize::from(has_header).min(rows.len())..] {
        if row.fields.len() < 2 {
            return Err(Error::Parse {
                line: row.line,
                message: "expected two columns x,U".into(),
            });
        }
        let x = parse_number(&row.fields[0], row.line)?;
        let u = parse_number(&row.fields[1], row.line)?;
        if !(x > 1.0 && x.is_finite()) {
            return Err(Error::Domain {
                x,
                reason: "x must be finite and > 1".into(),
                line: Some(row.line),
            });
        }
        if !(u > 0.0 && u.is_finite()) {
            return Err(Error::Domain {
                x,
                reason: format!("U(x) = {u} is not positive and finite"),
                line: Some(row.line),
            });
        }
        if table.insert(x.to_bits(), u.ln()).is_some() {
            return Err(Error::Parse {
                line: row.line,
                message: format!("duplicate x = {x}"),
            });
        }
    }
    let mut xs: Vec<f64> = table.keys().map(|b| f64::from_bits(*b)).collect();
    xs.sort_by(f64::total_cmp);
    let label = path.display().to_string();
    let f = MFunction::from_log(label, move |x| {
        table.get(&x.to_bits()).copied().unwrap_or(f64::NAN)
    });
    Ok((f, xs))
}

/// Shortest round-trip decimal form.
pub fn format_value(v: f64) -> String {
    format!("{v:?}")
}

pub fn series_csv(series: &EstimateSeries) -> String {
    let mut out = String::from("k,estimator_tag,value,defined\n");
    for p in &series.points {
        match p.value {
            Some(v) => writeln!(
                out,
                "{},{},{},1",
                p.k,
                series.estimator_tag,
                format_value(v)
            ),
            None => writeln!(out, "{},{},,0", p.k, series.estimator_tag),
        }
        .expect("writing to a String cannot fail");
    }
    out
}

pub fn write_series(path: &Path, series: &EstimateSeries) -> Result<()> {
    fs::write(path, series_csv(series))?;
    Ok(())
}

pub fn mindex_csv(diag: &MIndexDiagnostic) -> String {
    let mut out = String::from("x,ratio\n");
    for (x, r) in diag.grid.iter().zip(&diag.ratios) {
        writeln!(out, "{},{}", format_value(*x), format_value(*r))
            .expect("writing to a String cannot fail");
    }
    out
}

/// Pretty JSON with a trailing newline.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// Everything needed to rerun a command. The timestamp is informational.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: serde_json::Value,
    pub base_seed: Option<u64>,
    pub tool_version: String,
    pub timestamp: String,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new<P: Serialize>(
        command: &str,
        parameters: &P,
        base_seed: Option<u64>,
    ) -> Result<Self> {
        Ok(Self {
            command: command.into(),
            parameters: serde_json::to_value(parameters)?,
            base_seed,
            tool_version: env!("CARGO_PKG_VERSION").into(),
            timestamp: humantime::format_rfc3339_seconds(SystemTime::now()).to_string(),
            outputs: Vec::new(),
        })
    }
}

pub const MANIFEST_FILE: &str = "manifest.json";
