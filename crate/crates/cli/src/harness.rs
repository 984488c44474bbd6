//! Entry points exercised by the fuzz targets and by corpus replay in tests.
//! Each must return without panicking for any input.

use mzeta_core::golden;
use mzeta_core::EvaluationConfig;

use crate::grid::{self, MAX_RANGE_POINTS};
use crate::{evaluate, Function, Method};

pub fn range(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(points) = grid::parse_range(text) {
        assert!(points.len() <= MAX_RANGE_POINTS + 1 || !text.contains(':'));
        assert!(points.iter().all(|p| p.is_finite()));
    }
}

pub fn tuples(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(rows) = grid::parse_tuples(text) {
        assert!(rows
            .iter()
            .all(|r| !r.is_empty() && r.iter().all(|v| v.is_finite())));
    }
}

pub fn golden_table(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(table) = golden::parse_table(text) {
        let written = golden::write_table(&table).expect("parsed table writes");
        let again = golden::parse_table(&written).expect("written table parses");
        assert_eq!(again.rows.len(), table.rows.len());
    }
}

const FUNCTIONS: [Function; 5] = [
    Function::Zeta,
    Function::Hurwitz,
    Function::Zeta2,
    Function::Zeta3,
    Function::Tornheim,
];
const METHODS: [Method; 3] = [Method::Series, Method::Integral, Method::Approx];

/// First byte picks function and method; the rest is read as little-endian f64 arguments.
pub fn eval_inputs(data: &[u8]) {
    let Some((&selector, rest)) = data.split_first() else {
        return;
    };
    let function = FUNCTIONS[usize::from(selector) % FUNCTIONS.len()];
    let method = METHODS[usize::from(selector) / FUNCTIONS.len() % METHODS.len()];
    let args: Vec<f64> = rest
        .chunks_exact(8)
        .take(3)
        .map(|c| f64::from_le_bytes(c.try_into().expect("chunk of 8")))
        .collect();
    // keep arguments in a range where a single evaluation stays cheap
    if args.iter().any(|a| a.abs() > 64.0) {
        return;
    }
    let cfg = EvaluationConfig::default().with_max_segments(64);
    if let Ok(e) = evaluate(function, &args, method, &cfg) {
        assert!(e.value.is_finite() && e.error >= 0.0);
    }
}
