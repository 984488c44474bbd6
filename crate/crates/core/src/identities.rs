//! Integral representations of ζ₂ and ζ₃ and their verification against the series oracles.
//!
//! ζ₂(s₁,s₂) = s₁ ∫₁^∞ ζ(s₁+1,u) ζ(s₂,[u]+1) du
//!           = s₁ ∫₁^∞ ζ(s₁+1,u) ζ(s₂,u) du − A(s₁,s₂),   0 ≤ A ≤ s₁ζ(s₁+1)/(s₂−1),
//!
//! and the eight-term decomposition of ζ₃(s₁,s₂,s₃) for s_i > 1.

use indexmap::IndexMap;

use crate::config::EvaluationConfig;
use crate::error::{domain, Result, ZetaError};
use crate::hurwitz::{check_exponent, riemann_zeta};
use crate::quadrature::{integrate_product, odd_gap, smooth_pair_closed_form, IntegrandFactor};
use crate::report::VerificationReport;
use crate::series::{reflection_check, tornheim_series, zeta2_series, zeta3_series};
use crate::summation::CompensatedSum;

pub const THEOREM1_TOL: f64 = 1e-8;
/// Applied when s₁ + s₂ < 3.25 (the integrand decays like u^{-(s₁+s₂-1)}).
pub const THEOREM1_SLOW_TOL: f64 = 1e-6;
pub const THEOREM2_TOL: f64 = 1e-6;
/// Applied when every exponent is at least 3.
pub const THEOREM2_FAST_TOL: f64 = 1e-8;
pub const CLOSED_FORM_TOL: f64 = 1e-9;
pub const DUAL_ROUTE_TOL: f64 = 1e-9;
pub const TORNHEIM_REDUCTION_TOL: f64 = 1e-8;

pub const THEOREM1_S1: [f64; 4] = [1.0, 1.5, 2.0, 3.0];
pub const THEOREM1_S2: [f64; 4] = [1.5, 2.0, 3.0, 6.0];
pub const THEOREM2_POINTS: [(f64, f64, f64); 5] = [
    (2.0, 2.0, 2.0),
    (2.0, 3.0, 2.0),
    (3.0, 2.0, 4.0),
    (4.0, 4.0, 4.0),
    (2.0, 2.0, 3.0),
];
pub const REFLECTION_GRID: [f64; 4] = [1.5, 2.0, 3.0, 6.0];
pub const PAIR_CLOSED_FORM_S: [f64; 4] = [1.5, 2.0, 3.0, 5.0];
pub const TRIPLE_CLOSED_FORM_S: [f64; 2] = [2.0, 3.0];
pub const ODD_GAP_PAIRS: [(f64, f64); 3] = [(2.0, 5.0), (3.0, 6.0), (2.0, 7.0)];
pub const EVEN_GAP_PAIRS: [(f64, f64); 3] = [(2.0, 4.0), (2.0, 6.0), (3.0, 5.0)];
pub const TORNHEIM_S1: [f64; 3] = [1.5, 2.0, 3.0];
pub const TORNHEIM_S3: [f64; 2] = [2.0, 3.0];

pub fn theorem1_tolerance(s1: f64, s2: f64) -> f64 {
    if s1 + s2 < 3.25 {
        THEOREM1_SLOW_TOL
    } else {
        THEOREM1_TOL
    }
}

pub fn theorem2_tolerance(s1: f64, s2: f64, s3: f64) -> f64 {
    if s1.min(s2).min(s3) >= 3.0 {
        THEOREM2_FAST_TOL
    } else {
        THEOREM2_TOL
    }
}

fn rel_diff(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        (a - b).abs()
    } else {
        ((a - b) / b).abs()
    }
}

fn check_theorem1_domain(s1: f64, s2: f64) -> Result<()> {
    if !(s1.is_finite() && s1 >= 1.0) {
        return Err(domain(format!(
            "the stepped zeta2 integral needs s1 >= 1, got {s1}"
        )));
    }
    check_exponent(s2)
}

/// A value with its reported absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// ζ₂(s₁, s₂) through the stepped integral.
pub fn zeta2_integral(s1: f64, s2: f64, cfg: &EvaluationConfig) -> Result<f64> {
    zeta2_integral_estimate(s1, s2, cfg).map(|e| e.value)
}

pub fn zeta2_integral_estimate(s1: f64, s2: f64, cfg: &EvaluationConfig) -> Result<Estimate> {
    check_theorem1_domain(s1, s2)?;
    let q = integrate_product(
        &[IntegrandFactor::smooth(s1 + 1.0), IntegrandFactor::step(s2)],
        cfg,
    )?;
    Ok(Estimate {
        value: s1 * q.value,
        error: s1 * q.total_error(),
    })
}

/// The smooth approximation of ζ₂ and its gap A(s₁, s₂).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothApprox {
    /// s₁ ∫₁^∞ ζ(s₁+1,u) ζ(s₂,u) du
    pub approx: f64,
    /// approx − ζ₂(s₁,s₂), with ζ₂ from the stepped integral
    pub a_value: f64,
    /// s₁ ζ(s₁+1)/(s₂−1)
    pub a_bound: f64,
    /// The same approximation from the odd-gap recurrence, when s₂ − s₁ is an even positive integer.
    pub closed_form: Option<f64>,
    /// Absolute error carried by `a_value`.
    pub error: f64,
}

pub fn zeta2_smooth_approx(s1: f64, s2: f64, cfg: &EvaluationConfig) -> Result<SmoothApprox> {
    check_theorem1_domain(s1, s2)?;
    let smooth = integrate_product(
        &[
            IntegrandFactor::smooth(s1 + 1.0),
            IntegrandFactor::smooth(s2),
        ],
        cfg,
    )?;
    let approx = s1 * smooth.value;
    let stepped = zeta2_integral_estimate(s1, s2, cfg)?;
    let a_bound = s1 * riemann_zeta(s1 + 1.0, cfg)? / (s2 - 1.0);
    // s₂ − s₁ even ⇔ s₂ − (s₁+1) odd
    let closed_form = match odd_gap(s1 + 1.0, s2) {
        Some(_) => {
            let cf = s1 * smooth_pair_closed_form(s1 + 1.0, s2, cfg)?;
            let rel = rel_diff(approx, cf);
            if rel > DUAL_ROUTE_TOL {
                return Err(ZetaError::RouteMismatch {
                    what: format!("smooth approximation at ({s1}, {s2})"),
                    first: approx,
                    second: cf,
                    rel,
                });
            }
            Some(cf)
        }
        None => None,
    };
    Ok(SmoothApprox {
        approx,
        a_value: approx - stepped.value,
        a_bound,
        closed_form,
        error: s1 * smooth.total_error() + stepped.error,
    })
}

/// Series route against the stepped-integral route, with the A(s₁,s₂) bounds as side conditions.
pub fn verify_theorem1(s1: f64, s2: f64, cfg: &EvaluationConfig) -> Result<VerificationReport> {
    check_theorem1_domain(s1, s2)?;
    let series = zeta2_series(s1, s2, cfg)?;
    let integral = zeta2_integral(s1, s2, cfg)?;
    let approx = zeta2_smooth_approx(s1, s2, cfg)?;
    let mut detail = IndexMap::new();
    detail.insert("approx".to_string(), approx.approx);
    detail.insert("a_value".to_string(), approx.a_value);
    detail.insert("a_bound".to_string(), approx.a_bound);
    if let Some(cf) = approx.closed_form {
        detail.insert("approx_closed_form".to_string(), cf);
    }
    let mut report = VerificationReport::new(
        "theorem1",
        &[s1, s2],
        series,
        integral,
        theorem1_tolerance(s1, s2),
        detail,
    );
    report.require("a_nonnegative", approx.a_value >= -approx.error);
    report.require("a_within_bound", approx.a_value <= approx.a_bound);
    Ok(report)
}

/// The eight signed terms of the ζ₃ decomposition, in order.
#[derive(Debug, Clone, PartialEq)]
pub struct Zeta3Decomposition {
    pub terms: IndexMap<String, f64>,
    pub value: f64,
    pub error: f64,
}

/// ζ₃(s₁, s₂, s₃) through the eight-term decomposition.
pub fn zeta3_integral(s1: f64, s2: f64, s3: f64, cfg: &EvaluationConfig) -> Result<f64> {
    zeta3_decomposition(s1, s2, s3, cfg).map(|d| d.value)
}

pub fn zeta3_decomposition(
    s1: f64,
    s2: f64,
    s3: f64,
    cfg: &EvaluationConfig,
) -> Result<Zeta3Decomposition> {
    for s in [s1, s2, s3] {
        check_exponent(s).map_err(|_| {
            domain(format!(
                "the zeta3 decomposition needs s1, s2, s3 > 1, got ({s1}, {s2}, {s3})"
            ))
        })?;
    }
    use IntegrandFactor as F;
    let z1 = riemann_zeta(s1, cfg)?;
    let z2 = riemann_zeta(s2, cfg)?;
    let z3 = riemann_zeta(s3, cfg)?;
    let i_smooth2 = integrate_product(&[F::step(s1), F::smooth(s2 + 1.0), F::smooth(s3)], cfg)?;
    let i_smooth3 = integrate_product(&[F::step(s1), F::smooth(s2), F::smooth(s3 + 1.0)], cfg)?;
    let i_steps = integrate_product(&[F::step(s1), F::step(s2), F::smooth(s3 + 1.0)], cfg)?;

    let mut terms = IndexMap::new();
    terms.insert("zeta(s1)zeta(s2)zeta(s3)".to_string(), z1 * z2 * z3);
    terms.insert(
        "-zeta2(s1,s2+s3)".to_string(),
        -zeta2_series(s1, s2 + s3, cfg)?,
    );
    terms.insert(
        "-zeta2(s1+s2,s3)".to_string(),
        -zeta2_series(s1 + s2, s3, cfg)?,
    );
    terms.insert(
        "-zeta(s1)zeta2(s3,s2)".to_string(),
        -z1 * zeta2_series(s3, s2, cfg)?,
    );
    terms.insert(
        "-zeta(s1+s2+s3)".to_string(),
        -riemann_zeta(s1 + s2 + s3, cfg)?,
    );
    terms.insert(
        "-s2*int[zeta(s1,[u]+1)zeta(s2+1,u)zeta(s3,u)]".to_string(),
        -s2 * i_smooth2.value,
    );
    terms.insert(
        "-s3*int[zeta(s1,[u]+1)zeta(s2,u)zeta(s3+1,u)]".to_string(),
        -s3 * i_smooth3.value,
    );
    terms.insert(
        "+s3*int[zeta(s1,[u]+1)zeta(s2,[u]+1)zeta(s3+1,u)]".to_string(),
        s3 * i_steps.value,
    );
    let value = terms.values().copied().collect::<CompensatedSum>().value();
    let magnitude: f64 = terms.values().map(|t| t.abs()).sum();
    let error = s2 * i_smooth2.total_error()
        + s3 * (i_smooth3.total_error() + i_steps.total_error())
        + cfg.rel_tol * magnitude;
    Ok(Zeta3Decomposition {
        terms,
        value,
        error,
    })
}

/// Eight-term decomposition (lhs, with its terms in `detail`) against the nested series (rhs).
pub fn verify_theorem2(
    s1: f64,
    s2: f64,
    s3: f64,
    cfg: &EvaluationConfig,
) -> Result<VerificationReport> {
    let decomposition = zeta3_decomposition(s1, s2, s3, cfg)?;
    let series = zeta3_series(s1, s2, s3, cfg)?;
    Ok(VerificationReport::new(
        "theorem2",
        &[s1, s2, s3],
        decomposition.value,
        series,
        theorem2_tolerance(s1, s2, s3),
        decomposition.terms,
    ))
}

/// ∫₁^∞ ζ(s,u) ζ(s+1,u) du against ζ(s)²/(2s).
pub fn verify_pair_closed_form(s: f64, cfg: &EvaluationConfig) -> Result<VerificationReport> {
    check_exponent(s)?;
    let q = integrate_product(
        &[IntegrandFactor::smooth(s), IntegrandFactor::smooth(s + 1.0)],
        cfg,
    )?;
    let z = riemann_zeta(s, cfg)?;
    let mut detail = IndexMap::new();
    detail.insert("quadrature".to_string(), q.value);
    Ok(VerificationReport::new(
        "closed_form_pair",
        &[s],
        q.value,
        z * z / (2.0 * s),
        CLOSED_FORM_TOL,
        detail,
    ))
}

/// ∫₁^∞ ζ(s,u)² ζ(s+1,u) du against ζ(s)³/(3s).
pub fn verify_triple_closed_form(s: f64, cfg: &EvaluationConfig) -> Result<VerificationReport> {
    check_exponent(s)?;
    let q = integrate_product(
        &[
            IntegrandFactor::smooth(s),
            IntegrandFactor::smooth(s),
            IntegrandFactor::smooth(s + 1.0),
        ],
        cfg,
    )?;
    let z = riemann_zeta(s, cfg)?;
    let mut detail = IndexMap::new();
    detail.insert("quadrature".to_string(), q.value);
    Ok(VerificationReport::new(
        "closed_form_triple",
        &[s],
        q.value,
        z * z * z / (3.0 * s),
        CLOSED_FORM_TOL,
        detail,
    ))
}

/// ∫₁^∞ ζ(a,u) ζ(b,u) du by quadrature against the odd-gap recurrence.
pub fn verify_odd_gap(a: f64, b: f64, cfg: &EvaluationConfig) -> Result<VerificationReport> {
    let recurrence = smooth_pair_closed_form(a, b, cfg)?;
    let q = integrate_product(
        &[IntegrandFactor::smooth(a), IntegrandFactor::smooth(b)],
        cfg,
    )?;
    let mut detail = IndexMap::new();
    detail.insert("quadrature".to_string(), q.value);
    Ok(VerificationReport::new(
        "odd_gap_recurrence",
        &[a, b],
        q.value,
        recurrence,
        DUAL_ROUTE_TOL,
        detail,
    ))
}

/// s₁ ∫ ζ(s₁+1,u) ζ(s₂,u) du by quadrature against the recurrence, for s₂ − s₁ even.
pub fn verify_even_gap(s1: f64, s2: f64, cfg: &EvaluationConfig) -> Result<VerificationReport> {
    check_theorem1_domain(s1, s2)?;
    if odd_gap(s1 + 1.0, s2).is_none() {
        return Err(domain(format!(
            "s2 - s1 must be an even positive integer, got ({s1}, {s2})"
        )));
    }
    let q = integrate_product(
        &[
            IntegrandFactor::smooth(s1 + 1.0),
            IntegrandFactor::smooth(s2),
        ],
        cfg,
    )?;
    let cf = s1 * smooth_pair_closed_form(s1 + 1.0, s2, cfg)?;
    let mut detail = IndexMap::new();
    detail.insert("quadrature".to_string(), s1 * q.value);
    Ok(VerificationReport::new(
        "even_gap_dual_route",
        &[s1, s2],
        s1 * q.value,
        cf,
        DUAL_ROUTE_TOL,
        detail,
    ))
}

/// T(s₁, 0, s₃) against ζ₂(s₁, s₃).
pub fn verify_tornheim_reduction(
    s1: f64,
    s3: f64,
    cfg: &EvaluationConfig,
) -> Result<VerificationReport> {
    let t = tornheim_series(s1, 0.0, s3, cfg)?;
    let z = zeta2_series(s1, s3, cfg)?;
    let mut detail = IndexMap::new();
    detail.insert("tornheim(s1,0,s3)".to_string(), t);
    Ok(VerificationReport::new(
        "tornheim_reduction",
        &[s1, s3],
        t,
        z,
        TORNHEIM_REDUCTION_TOL,
        detail,
    ))
}

/// One verifiable identity at one argument tuple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Check {
    Theorem1(f64, f64),
    Theorem2(f64, f64, f64),
    Reflection(f64, f64),
    PairClosedForm(f64),
    TripleClosedForm(f64),
    OddGap(f64, f64),
    EvenGap(f64, f64),
    TornheimReduction(f64, f64),
}

impl Check {
    pub fn run(&self, cfg: &EvaluationConfig) -> Result<VerificationReport> {
        match *self {
            Check::Theorem1(a, b) => verify_theorem1(a, b, cfg),
            Check::Theorem2(a, b, c) => verify_theorem2(a, b, c, cfg),
            Check::Reflection(a, b) => reflection_check(a, b, cfg),
            Check::PairClosedForm(s) => verify_pair_closed_form(s, cfg),
            Check::TripleClosedForm(s) => verify_triple_closed_form(s, cfg),
            Check::OddGap(a, b) => verify_odd_gap(a, b, cfg),
            Check::EvenGap(a, b) => verify_even_gap(a, b, cfg),
            Check::TornheimReduction(a, b) => verify_tornheim_reduction(a, b, cfg),
        }
    }
}

/// Named groups of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Reflection,
    ClosedForms,
    TornheimReduction,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "theorem1" => Suite::Theorem1,
            "theorem2" => Suite::Theorem2,
            "reflection" => Suite::Reflection,
            "closed-forms" => Suite::ClosedForms,
            "tornheim-reduction" => Suite::TornheimReduction,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub fn default_checks(&self) -> Vec<Check> {
        match self {
            Suite::Theorem1 => THEOREM1_S1
                .iter()
                .flat_map(|&a| THEOREM1_S2.iter().map(move |&b| Check::Theorem1(a, b)))
                .collect(),
            Suite::Theorem2 => THEOREM2_POINTS
                .iter()
                .map(|&(a, b, c)| Check::Theorem2(a, b, c))
                .collect(),
            Suite::Reflection => REFLECTION_GRID
                .iter()
                .flat_map(|&a| {
                    REFLECTION_GRID
                        .iter()
                        .map(move |&b| Check::Reflection(a, b))
                })
                .collect(),
            Suite::ClosedForms => PAIR_CLOSED_FORM_S
                .iter()
                .map(|&s| Check::PairClosedForm(s))
                .chain(
                    TRIPLE_CLOSED_FORM_S
                        .iter()
                        .map(|&s| Check::TripleClosedForm(s)),
                )
                .chain(ODD_GAP_PAIRS.iter().map(|&(a, b)| Check::OddGap(a, b)))
                .chain(EVEN_GAP_PAIRS.iter().map(|&(a, b)| Check::EvenGap(a, b)))
                .collect(),
            Suite::TornheimReduction => TORNHEIM_S1
                .iter()
                .flat_map(|&a| {
                    TORNHEIM_S3
                        .iter()
                        .map(move |&b| Check::TornheimReduction(a, b))
                })
                .collect(),
            Suite::All => [
                Suite::Theorem1,
                Suite::Theorem2,
                Suite::Reflection,
                Suite::ClosedForms,
                Suite::TornheimReduction,
            ]
            .iter()
            .flat_map(|s| s.default_checks())
            .collect(),
        }
    }

    /// Checks for one user-supplied argument tuple.
    pub fn checks_for(&self, args: &[f64]) -> Result<Vec<Check>> {
        let arity_error = || {
            domain(format!(
                "suite {self:?} cannot take a {}-tuple of arguments",
                args.len()
            ))
        };
        Ok(match (self, args) {
            (Suite::Theorem1, &[a, b]) => vec![Check::Theorem1(a, b)],
            (Suite::Theorem2, &[a, b, c]) => vec![Check::Theorem2(a, b, c)],
            (Suite::Reflection, &[a, b]) => vec![Check::Reflection(a, b)],
            (Suite::TornheimReduction, &[a, b]) => vec![Check::TornheimReduction(a, b)],
            (Suite::ClosedForms, &[s]) => {
                vec![Check::PairClosedForm(s), Check::TripleClosedForm(s)]
            }
            (Suite::ClosedForms, &[a, b]) => {
                if odd_gap(a, b).is_some() {
                    vec![Check::OddGap(a, b)]
                } else {
                    vec![Check::EvenGap(a, b)]
                }
            }
            _ => return Err(arity_error()),
        })
    }
}
