//! Brute-force series oracles for ζ₂, ζ₃ and Tornheim's T.
//!
//! These never touch the quadrature module: each is a direct partial sum
//! closed off by an expansion of the summand in inverse powers of the
//! summation index (see [`crate::asymptotic`]), or, for Tornheim's double
//! series, by rows and columns summed exactly and a corner estimated from the
//! homogeneity of the summand.

use indexmap::IndexMap;

use crate::asymptotic::InversePowerSeries;
use crate::config::EvaluationConfig;
use crate::error::{domain, Result, ZetaError};
use crate::hurwitz::{check_exponent, hurwitz_raw, riemann_zeta};
use crate::report::VerificationReport;
use crate::summation::CompensatedSum;

const START_TRUNCATION: usize = 32;
const ZETA2_FLOOR: f64 = 1e-10;
const ZETA3_FLOOR: f64 = 1e-8;
const TORNHEIM_FLOOR: f64 = 1e-8;
/// Tolerance for the reflection identity between two series evaluations.
pub const REFLECTION_TOL: f64 = 1e-9;

/// A series value with the parameters that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    /// Estimated error of the closed-off tail (plus rounding).
    pub tail_bound: f64,
    /// Truncation point of the outer direct sum.
    pub truncation: usize,
}

impl SeriesValue {
    fn relative_error(&self) -> f64 {
        self.tail_bound / self.value.abs()
    }
}

fn check_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("{name} must be finite, got {x}")))
    }
}

/// Runs `eval` at truncation points 32, 64, … until the target is met or the cap is hit.
fn refine(
    what: &str,
    cfg: &EvaluationConfig,
    start: usize,
    floor: f64,
    mut eval: impl FnMut(usize) -> Result<SeriesValue>,
) -> Result<SeriesValue> {
    cfg.validate()?;
    let cap = cfg.max_segments.max(start);
    let mut n = start.min(cap);
    loop {
        let v = eval(n)?;
        if v.relative_error() <= cfg.rel_tol {
            return Ok(v);
        }
        if n >= cap {
            let required = cfg.rel_tol.max(floor);
            if v.relative_error() <= required {
                return Ok(v);
            }
            return Err(ZetaError::Accuracy {
                what: format!("{what} tail at truncation {n}"),
                achieved: v.relative_error(),
                required,
            });
        }
        n = (2 * n).min(cap);
    }
}

/// ζ₂(s₁, s₂) = Σ_{n≥1} n^{-s₁} ζ(s₂, n+1), for s₁ ≥ 1 and s₂ > 1.
pub fn zeta2_series(s1: f64, s2: f64, cfg: &EvaluationConfig) -> Result<f64> {
    zeta2_series_estimate(s1, s2, cfg).map(|v| v.value)
}

pub fn zeta2_series_estimate(s1: f64, s2: f64, cfg: &EvaluationConfig) -> Result<SeriesValue> {
    check_finite("s1", s1)?;
    if s1 < 1.0 {
        return Err(domain(format!("zeta2 requires s1 >= 1, got {s1}")));
    }
    check_exponent(s2)?;
    let summand = InversePowerSeries::power(s1).mul(&InversePowerSeries::hurwitz(s2, true));
    refine("zeta2_series", cfg, START_TRUNCATION, ZETA2_FLOOR, |n| {
        let mut acc = CompensatedSum::new();
        let mut magnitude = 0.0;
        for k in 1..n {
            let kf = k as f64;
            let t = kf.powf(-s1) * hurwitz_raw(s2, kf + 1.0, cfg)?;
            acc.add(t);
            magnitude += t;
        }
        let tail = summand.sum_from(n, cfg)?;
        acc.add(tail.value);
        Ok(SeriesValue {
            value: acc.value(),
            tail_bound: tail.error + 4.0 * f64::EPSILON * magnitude,
            truncation: n,
        })
    })
}

/// ζ₃(s₁, s₂, s₃) = Σ_{n₁} n₁^{-s₁} Σ_{n₂>n₁} n₂^{-s₂} ζ(s₃, n₂+1), all exponents > 1.
pub fn zeta3_series(s1: f64, s2: f64, s3: f64, cfg: &EvaluationConfig) -> Result<f64> {
    zeta3_series_estimate(s1, s2, s3, cfg).map(|v| v.value)
}

pub fn zeta3_series_estimate(
    s1: f64,
    s2: f64,
    s3: f64,
    cfg: &EvaluationConfig,
) -> Result<SeriesValue> {
    for s in [s1, s2, s3] {
        check_exponent(s).map_err(|_| {
            domain(format!(
                "zeta3 is supported only for s1, s2, s3 > 1, got ({s1}, {s2}, {s3})"
            ))
        })?;
    }
    // inner summand φ(n) = n^{-s₂} ζ(s₃, n+1) and its strict tail h(x) = Σ_{n>x} φ(n)
    let inner = InversePowerSeries::power(s2).mul(&InversePowerSeries::hurwitz(s3, true));
    let inner_tail = inner.strict_tail();
    let outer = InversePowerSeries::power(s1).mul(&inner_tail);
    let zeta_s1 = riemann_zeta(s1, cfg)?;

    refine("zeta3_series", cfg, START_TRUNCATION, ZETA3_FLOOR, |n| {
        // h(n-1) = Σ_{m≥n} φ(m), then h(k-1) = h(k) + φ(k) going down
        let start = inner.sum_from(n, cfg)?;
        let mut h = CompensatedSum::new();
        h.add(start.value);
        let mut outer_acc = CompensatedSum::new();
        let mut magnitude = 0.0;
        for k in (1..n).rev() {
            let kf = k as f64;
            // h currently holds h(k)
            let t = kf.powf(-s1) * h.value();
            outer_acc.add(t);
            magnitude += t;
            h.add(kf.powf(-s2) * hurwitz_raw(s3, kf + 1.0, cfg)?);
        }
        let tail = outer.sum_from(n, cfg)?;
        outer_acc.add(tail.value);
        Ok(SeriesValue {
            value: outer_acc.value(),
            tail_bound: tail.error + start.error * zeta_s1 + 8.0 * f64::EPSILON * magnitude,
            truncation: n,
        })
    })
}

/// Tornheim's T(s₁, s₂, s₃) = Σ_{n₁,n₂≥1} n₁^{-s₁} n₂^{-s₂} (n₁+n₂)^{-s₃}.
pub fn tornheim_series(s1: f64, s2: f64, s3: f64, cfg: &EvaluationConfig) -> Result<f64> {
    tornheim_series_estimate(s1, s2, s3, cfg).map(|v| v.value)
}

pub fn tornheim_series_estimate(
    s1: f64,
    s2: f64,
    s3: f64,
    cfg: &EvaluationConfig,
) -> Result<SeriesValue> {
    for (name, s) in [("s1", s1), ("s2", s2), ("s3", s3)] {
        check_finite(name, s)?;
        if s < 0.0 {
            return Err(domain(format!("tornheim requires {name} >= 0, got {s}")));
        }
    }
    if !(s1 + s3 > 1.0 && s2 + s3 > 1.0 && s1 + s2 + s3 > 2.0) {
        return Err(domain(format!(
            "tornheim({s1}, {s2}, {s3}) lies outside s1+s3 > 1, s2+s3 > 1, s1+s2+s3 > 2"
        )));
    }
    let sigma = s1 + s2 + s3;
    let corner_shape =
        (half_beta(s2 + s3 - 1.0, s2) + half_beta(s1 + s3 - 1.0, s1)) / (sigma - 2.0);

    // corner Σ_{n₁,n₂≥N} ≈ ∫∫_{[N-½,∞)²} with error ~ a^{-σ}: Richardson across successive N,
    // and the change between successive extrapolations as the error estimate
    let mut previous_raw: Option<(f64, f64)> = None;
    let mut previous_extrapolated: Option<f64> = None;
    refine("tornheim_series", cfg, 128, TORNHEIM_FLOOR, |n| {
        let (rows_cols, magnitude) = tornheim_rows_and_columns(s1, s2, s3, n, cfg)?;
        let a = n as f64 - 0.5;
        let corner = corner_shape * a.powf(2.0 - sigma);
        let raw = rows_cols + corner;
        let (value, bound) = match previous_raw {
            Some((prev_raw, prev_a)) => {
                let w_new = a.powf(sigma);
                let w_old = prev_a.powf(sigma);
                let extrapolated = (raw * w_new - prev_raw * w_old) / (w_new - w_old);
                let bound = match previous_extrapolated {
                    Some(prev) => (extrapolated - prev).abs(),
                    None => (extrapolated - raw).abs(),
                };
                previous_extrapolated = Some(extrapolated);
                (extrapolated, bound)
            }
            None => (raw, corner * sigma * (sigma + 1.0) / (12.0 * a * a)),
        };
        previous_raw = Some((raw, a));
        Ok(SeriesValue {
            value,
            tail_bound: bound + 8.0 * f64::EPSILON * magnitude,
            truncation: n,
        })
    })
}

/// Rows n₁ < N (all n₂) plus columns n₂ < N with n₁ ≥ N.
fn tornheim_rows_and_columns(
    s1: f64,
    s2: f64,
    s3: f64,
    n: usize,
    cfg: &EvaluationConfig,
) -> Result<(f64, f64)> {
    let mut acc = CompensatedSum::new();
    let mut magnitude = 0.0;
    for k in 1..n {
        let kf = k as f64;
        let row = kf.powf(-s1) * shifted_power_sum(1, kf, s2, s3, cfg)?;
        let column = kf.powf(-s2) * shifted_power_sum(n, kf, s1, s3, cfg)?;
        acc.add(row);
        acc.add(column);
        magnitude += row + column;
    }
    Ok((acc.value(), magnitude))
}

/// Σ_{k≥k0} k^{-a} (k+c)^{-b} for c ≥ 1, a + b > 1.
///
/// Direct up to M ≥ 4c + 16, then (k+c)^{-b} = k^{-b} Σ_j binom(-b, j) (c/k)^j,
/// which converges at least like 4^{-j} beyond M.
fn shifted_power_sum(k0: usize, c: f64, a: f64, b: f64, cfg: &EvaluationConfig) -> Result<f64> {
    let m = k0.max((4.0 * c) as usize + 16);
    let mut acc = CompensatedSum::new();
    for k in k0..m {
        let kf = k as f64;
        acc.add(kf.powf(-a) * (kf + c).powf(-b));
    }
    let mf = m as f64;
    let mut coef = 1.0; // binom(-b, j) c^j
    let mut j = 0usize;
    loop {
        let t = coef * hurwitz_raw(a + b + j as f64, mf, cfg)?;
        acc.add(t);
        if coef == 0.0 || (j >= 4 && t.abs() <= 1e-3 * f64::EPSILON * acc.value().abs()) {
            break;
        }
        if j > 400 {
            return Err(ZetaError::Accuracy {
                what: "tornheim binomial tail".into(),
                achieved: t.abs() / acc.value().abs(),
                required: f64::EPSILON,
            });
        }
        let jf = j as f64;
        coef *= -(b + jf) / (jf + 1.0) * c;
        j += 1;
    }
    Ok(acc.value())
}

/// ∫_0^{1/2} w^{p-1} (1-w)^{-q} dw = Σ_j (q)_j / j! · 2^{-(p+j)} / (p+j), p > 0.
fn half_beta(p: f64, q: f64) -> f64 {
    let mut acc = CompensatedSum::new();
    let mut coef = 0.5f64.powf(p);
    for j in 0..2000 {
        let jf = j as f64;
        let t = coef / (p + jf);
        acc.add(t);
        if t <= 1e-3 * f64::EPSILON * acc.value() {
            break;
        }
        coef *= 0.5 * (q + jf) / (jf + 1.0);
    }
    acc.value()
}

/// Checks ζ₂(s₁,s₂) + ζ₂(s₂,s₁) = ζ(s₁)ζ(s₂) − ζ(s₁+s₂) with both sides from independent routes.
pub fn reflection_check(s1: f64, s2: f64, cfg: &EvaluationConfig) -> Result<VerificationReport> {
    check_exponent(s1)?;
    check_exponent(s2)?;
    let forward = zeta2_series(s1, s2, cfg)?;
    let backward = zeta2_series(s2, s1, cfg)?;
    let lhs = forward + backward;
    let rhs = riemann_zeta(s1, cfg)? * riemann_zeta(s2, cfg)? - riemann_zeta(s1 + s2, cfg)?;
    let mut detail = IndexMap::new();
    detail.insert("zeta2(s1,s2)".to_string(), forward);
    detail.insert("zeta2(s2,s1)".to_string(), backward);
    Ok(VerificationReport::new(
        "reflection",
        &[s1, s2],
        lhs,
        rhs,
        REFLECTION_TOL,
        detail,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvaluationConfig {
        EvaluationConfig::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn half_beta_symmetric_case() {
        // p = 1, q = 0: ∫_0^{1/2} dw
        assert!((half_beta(1.0, 0.0) - 0.5).abs() < 1e-16);
        // p = 1, q = 1: ∫_0^{1/2} dw/(1-w) = ln 2
        assert!(rel(half_beta(1.0, 1.0), std::f64::consts::LN_2) < 1e-15);
    }

    #[test]
    fn shifted_power_sum_against_direct() {
        let c = cfg();
        let got = shifted_power_sum(3, 5.0, 2.0, 2.0, &c).unwrap();
        let mut acc = CompensatedSum::new();
        for k in (3..2_000_000u64).rev() {
            let kf = k as f64;
            acc.add(kf.powi(-2) * (kf + 5.0).powi(-2));
        }
        // tail beyond 2e6 is ~ (2e6)^{-3}/3
        assert!(rel(got, acc.value()) < 1e-14);
    }

    #[test]
    fn domain_checks() {
        let c = cfg();
        assert!(matches!(
            zeta2_series(0.9, 2.0, &c),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            zeta2_series(1.0, 1.0, &c),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            zeta3_series(1.0, 2.0, 2.0, &c),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            tornheim_series(0.5, 0.0, 0.5, &c),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            tornheim_series(-1.0, 2.0, 2.0, &c),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            tornheim_series(1.0, 1.0, f64::NAN, &c),
            Err(ZetaError::Domain(_))
        ));
    }

    #[test]
    fn zeta2_known_values() {
        let c = cfg();
        assert!(rel(zeta2_series(1.0, 2.0, &c).unwrap(), 1.2020569031595943) < 1e-12);
        assert!(rel(zeta2_series(2.0, 2.0, &c).unwrap(), 0.8117424252833534) < 1e-12);
    }

    #[test]
    fn reflection_symmetric_point() {
        let r = reflection_check(2.0, 2.0, &cfg()).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.detail["zeta2(s1,s2)"], r.detail["zeta2(s2,s1)"]);
        assert!((r.lhs - 2.0 * r.detail["zeta2(s1,s2)"]).abs() == 0.0);
    }
}
