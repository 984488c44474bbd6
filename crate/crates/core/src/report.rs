use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

/// Outcome of checking one identity at one argument tuple.
///
/// `passed` is decided by relative error against `rhs`, except that when
/// |rhs| < 1 the absolute error is compared to the tolerance instead.
/// Where the report describes a decomposition, `detail` holds the signed
/// terms whose sum is `lhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub args: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub passed: bool,
    pub detail: IndexMap<String, f64>,
}

impl VerificationReport {
    pub fn new(
        identity: impl Into<String>,
        args: &[f64],
        lhs: f64,
        rhs: f64,
        tol: f64,
        detail: IndexMap<String, f64>,
    ) -> Self {
        let abs_err = (lhs - rhs).abs();
        let rel_err = if rhs == 0.0 {
            abs_err
        } else {
            abs_err / rhs.abs()
        };
        let passed = if rhs.abs() < 1.0 {
            abs_err <= tol
        } else {
            rel_err <= tol
        };
        Self {
            identity: identity.into(),
            args: args.to_vec(),
            lhs,
            rhs,
            abs_err,
            rel_err,
            tol,
            passed,
            detail,
        }
    }

    /// Marks the report failed when a side condition does not hold, recording it in `detail`.
    pub fn require(&mut self, label: &str, holds: bool) {
        self.detail
            .insert(label.to_string(), if holds { 1.0 } else { 0.0 });
        self.passed &= holds;
    }

    /// Sum of the detail entries (meaningful for decomposition reports).
    pub fn detail_sum(&self) -> f64 {
        crate::summation::compensated_sum(self.detail.values().copied())
    }
}
