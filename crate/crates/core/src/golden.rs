//! Versioned table of reference values minted by the series oracles.
//!
//! Format: `#` comment lines (the first must be `# version N`), then a CSV header
//! `function,args,value,truncation,tail_bound`. Arguments are `;`-separated.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::config::EvaluationConfig;
use crate::error::{Result, ZetaError};
use crate::series::{
    tornheim_series_estimate, zeta2_series_estimate, zeta3_series_estimate, SeriesValue,
};

pub const GOLDEN_VERSION: u32 = 1;
pub const HEADER: [&str; 5] = ["function", "args", "value", "truncation", "tail_bound"];

/// Points minted into the shipped table.
pub const GOLDEN_POINTS: &[(&str, &[f64])] = &[
    ("zeta2", &[3.0, 2.0]),
    ("zeta2", &[2.0, 2.0]),
    ("zeta2", &[1.0, 2.0]),
    ("zeta3", &[2.0, 2.0, 2.0]),
    ("zeta3", &[2.0, 3.0, 2.0]),
    ("zeta3", &[3.0, 2.0, 4.0]),
    ("tornheim", &[2.0, 2.0, 2.0]),
];

const SHIPPED: &str = include_str!("../data/golden_v1.csv");

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenRow {
    pub function: String,
    pub args: Vec<f64>,
    pub value: f64,
    pub truncation: usize,
    pub tail_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenTable {
    pub version: u32,
    pub rows: Vec<GoldenRow>,
}

#[derive(Serialize, Deserialize)]
struct RawRow {
    function: String,
    args: String,
    value: f64,
    truncation: usize,
    tail_bound: f64,
}

fn golden_err(msg: impl Into<String>) -> ZetaError {
    ZetaError::Golden(msg.into())
}

pub fn format_args(args: &[f64]) -> String {
    args.iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

pub fn parse_args(field: &str) -> Result<Vec<f64>> {
    field
        .split(';')
        .map(|t| {
            let v: f64 = t
                .trim()
                .parse()
                .map_err(|_| golden_err(format!("bad argument {t:?}")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(golden_err(format!("non-finite argument {t:?}")))
            }
        })
        .collect()
}

pub fn parse_table(text: &str) -> Result<GoldenTable> {
    let first = text
        .lines()
        .next()
        .ok_or_else(|| golden_err("empty table"))?;
    let version = first
        .strip_prefix('#')
        .and_then(|l| l.trim().strip_prefix("version"))
        .and_then(|v| v.trim().parse::<u32>().ok())
        .ok_or_else(|| golden_err(format!("missing version line, found {first:?}")))?;
    if version != GOLDEN_VERSION {
        return Err(golden_err(format!("unsupported table version {version}")));
    }
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| golden_err(e.to_string()))?;
    if headers.iter().ne(HEADER.iter().copied()) {
        return Err(golden_err(format!("unexpected header {headers:?}")));
    }
    let mut rows = Vec::new();
    for record in reader.deserialize::<RawRow>() {
        let raw = record.map_err(|e| golden_err(e.to_string()))?;
        if !raw.value.is_finite() || !(raw.tail_bound >= 0.0 && raw.tail_bound.is_finite()) {
            return Err(golden_err(format!(
                "bad value or bound for {}",
                raw.function
            )));
        }
        rows.push(GoldenRow {
            args: parse_args(&raw.args)?,
            function: raw.function,
            value: raw.value,
            truncation: raw.truncation,
            tail_bound: raw.tail_bound,
        });
    }
    Ok(GoldenTable { version, rows })
}

pub fn write_table(table: &GoldenTable) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(HEADER)
        .map_err(|e| golden_err(e.to_string()))?;
    for row in &table.rows {
        writer
            .write_record([
                row.function.clone(),
                format_args(&row.args),
                format!("{:.16e}", row.value),
                row.truncation.to_string(),
                format!("{:.3e}", row.tail_bound),
            ])
            .map_err(|e| golden_err(e.to_string()))?;
    }
    let body = writer.into_inner().map_err(|e| golden_err(e.to_string()))?;
    let body = String::from_utf8(body).map_err(|e| golden_err(e.to_string()))?;
    Ok(format!("# version {}\n{body}", table.version))
}

/// Series-oracle value for a golden function name.
pub fn evaluate(function: &str, args: &[f64], cfg: &EvaluationConfig) -> Result<SeriesValue> {
    match (function, args) {
        ("zeta2", &[a, b]) => zeta2_series_estimate(a, b, cfg),
        ("zeta3", &[a, b, c]) => zeta3_series_estimate(a, b, c, cfg),
        ("tornheim", &[a, b, c]) => tornheim_series_estimate(a, b, c, cfg),
        _ => Err(golden_err(format!(
            "no series oracle for {function} with {} arguments",
            args.len()
        ))),
    }
}

pub fn mint(cfg: &EvaluationConfig) -> Result<GoldenTable> {
    let rows = GOLDEN_POINTS
        .iter()
        .map(|&(function, args)| {
            let v = evaluate(function, args, cfg)?;
            Ok(GoldenRow {
                function: function.to_string(),
                args: args.to_vec(),
                value: v.value,
                truncation: v.truncation,
                tail_bound: v.tail_bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GoldenTable {
        version: GOLDEN_VERSION,
        rows,
    })
}

/// The table shipped with the crate.
pub fn shipped() -> &'static GoldenTable {
    static TABLE: OnceLock<GoldenTable> = OnceLock::new();
    TABLE.get_or_init(|| parse_table(SHIPPED).expect("shipped golden table parses"))
}

pub fn lookup(function: &str, args: &[f64]) -> Option<&'static GoldenRow> {
    shipped()
        .rows
        .iter()
        .find(|r| r.function == function && r.args == args)
}
