//! CSV and JSON rendering. Reals use 17 significant digits.

use mzeta_core::VerificationReport;
use serde::Serialize;

use crate::CliError;

/// 17 significant digits in scientific notation.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn json_line<T: Serialize>(v: &T) -> Result<String, CliError> {
    serde_json::to_string(v)
        .map(|s| s + "\n")
        .map_err(|e| CliError::io("json", e.into()))
}

pub const REPORT_COLUMNS: [&str; 9] = [
    "identity", "args", "lhs", "rhs", "abs_err", "rel_err", "tol", "passed", "detail",
];

fn csv_err(e: csv::Error) -> CliError {
    CliError::io("csv", e.into())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::io("csv", e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| CliError::io("csv", std::io::Error::other(e)))
}

/// One row per report; `args` is `;`-joined and `detail` is `key=value` pairs joined by `;`.
pub fn reports_csv(reports: &[VerificationReport]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(REPORT_COLUMNS).map_err(csv_err)?;
    for r in reports {
        let args = r
            .args
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(";");
        let detail = r
            .detail
            .iter()
            .map(|(k, v)| format!("{k}={}", real(*v)))
            .collect::<Vec<_>>()
            .join(";");
        w.write_record([
            r.identity.clone(),
            args,
            real(r.lhs),
            real(r.rhs),
            real(r.abs_err),
            real(r.rel_err),
            real(r.tol),
            r.passed.to_string(),
            detail,
        ])
        .map_err(csv_err)?;
    }
    finish(w)
}

/// One tabulated evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub function: String,
    pub method: String,
    pub args: Vec<f64>,
    pub value: f64,
    pub error: f64,
}

/// Columns: function, method, s1..s{arity}, value, error.
pub fn table_csv(rows: &[TableRow], arity: usize) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["function".to_string(), "method".to_string()];
    header.extend((1..=arity).map(|i| format!("s{i}")));
    header.extend(["value".to_string(), "error".to_string()]);
    w.write_record(&header).map_err(csv_err)?;
    for r in rows {
        let mut rec = vec![r.function.clone(), r.method.clone()];
        rec.extend(r.args.iter().map(|a| real(*a)));
        rec.push(real(r.value));
        rec.push(real(r.error));
        w.write_record(&rec).map_err(csv_err)?;
    }
    finish(w)
}
