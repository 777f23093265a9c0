//! Deterministic JSON and CSV rendering.
//!
//! Floats are written with 17 significant digits (`{:.16e}`), which
//! round-trips every `f64`; non-finite values become `null` in JSON and
//! `NaN`/`inf`/`-inf` in CSV.

use std::io::{self, Write};

use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};
use serde_json::ser::Formatter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "NaN".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

struct FixedFloat;

impl Formatter for FixedFloat {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        write!(w, "{v:.16e}")
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, v: f32) -> io::Result<()> {
        self.write_f64(w, f64::from(v))
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Vec<u8> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloat);
    value
        .serialize(&mut ser)
        .expect("serializing to memory cannot fail");
    out.push(b'\n');
    out
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    F(f64),
    I(i64),
    B(bool),
    S(String),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::F(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::I(i64::from(v))
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::I(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::B(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::S(v.to_owned())
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::F(v) => fmt_f64(*v),
            Cell::I(v) => v.to_string(),
            Cell::B(v) => v.to_string(),
            Cell::S(v) => v.clone(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::F(v) => s.serialize_f64(*v),
            Cell::I(v) => s.serialize_i64(*v),
            Cell::B(v) => s.serialize_bool(*v),
            Cell::S(v) => s.serialize_str(v),
        }
    }
}

/// Rows with a fixed header; rendered as CSV or as a JSON array of objects
/// whose keys follow header order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn to_csv(&self) -> Vec<u8> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text))
                .expect("in-memory write");
        }
        w.into_inner().expect("in-memory flush")
    }
}

struct RowRef<'a>(&'a [&'static str], &'a [Cell]);

impl Serialize for RowRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0.iter().zip(self.1) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for Table {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows.len()))?;
        for row in &self.rows {
            seq.serialize_element(&RowRef(&self.header, row))?;
        }
        seq.end()
    }
}

/// Result of a command before rendering.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    /// Pre-rendered JSON document.
    Json(Vec<u8>),
    Table {
        table: Table,
        default: Format,
    },
}

impl Output {
    pub fn json<T: Serialize + ?Sized>(value: &T) -> Self {
        Output::Json(to_json(value))
    }

    pub fn csv(table: Table) -> Self {
        Output::Table {
            table,
            default: Format::Csv,
        }
    }

    /// `None` when a single result is asked for as CSV.
    pub fn render(&self, format: Option<Format>) -> Option<Vec<u8>> {
        match (self, format) {
            (Output::Json(bytes), None | Some(Format::Json)) => Some(bytes.clone()),
            (Output::Json(_), Some(Format::Csv)) => None,
            (Output::Table { table, default }, f) => Some(match f.unwrap_or(*default) {
                Format::Csv => table.to_csv(),
                Format::Json => to_json(table),
            }),
        }
    }
}
