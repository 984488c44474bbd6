//! Hurwitz zeta ζ(s, α) for real s > 1, α > 0 by Euler–Maclaurin summation.
//!
//! ζ(s, α) = Σ_{k<N} (k+α)^{-s} + x^{1-s}/(s-1) + x^{-s}/2
//!          + Σ_{j=1..K} B_{2j}/(2j)! · s(s+1)…(s+2j-2) · x^{-s-2j+1} + R,   x = N + α.
//!
//! For real s > 0 the summand is completely monotone, so |R| is bounded by the
//! first omitted correction. N starts at max(em_terms, 10, ⌈s⌉ + 10) and is
//! doubled until that bound is below a quarter ulp of the result (or, failing
//! that, below `rel_tol`).

use crate::bernoulli::scaled_bernoulli;
use crate::config::EvaluationConfig;
use crate::error::{domain, Result, ZetaError};
use crate::summation::CompensatedSum;

/// Validated argument pair (s, α) with s > 1 and α > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaArgument {
    s: f64,
    alpha: f64,
}

impl ZetaArgument {
    pub fn new(s: f64, alpha: f64) -> Result<Self> {
        check_exponent(s)?;
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(domain(format!(
                "shift must be a finite real > 0, got {alpha}"
            )));
        }
        Ok(Self { s, alpha })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

pub(crate) fn check_exponent(s: f64) -> Result<()> {
    if s.is_finite() && s > 1.0 {
        Ok(())
    } else {
        Err(domain(format!(
            "exponent must be a finite real > 1, got {s}"
        )))
    }
}

/// A Hurwitz value together with its certified error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzValue {
    pub value: f64,
    /// Euler–Maclaurin remainder bound plus a rounding allowance.
    pub error_bound: f64,
    /// Number of directly summed terms.
    pub terms: usize,
}

/// ζ(s, α) to relative accuracy `cfg.rel_tol` (in practice close to machine precision).
pub fn hurwitz_zeta(arg: ZetaArgument, cfg: &EvaluationConfig) -> Result<f64> {
    hurwitz_zeta_bounded(arg, cfg).map(|v| v.value)
}

/// Like [`hurwitz_zeta`] but also surfaces the error bound; useful near the pole at s = 1.
pub fn hurwitz_zeta_bounded(arg: ZetaArgument, cfg: &EvaluationConfig) -> Result<HurwitzValue> {
    cfg.validate()?;
    euler_maclaurin(arg.s, arg.alpha, cfg)
}

/// ζ(s) = ζ(s, 1).
pub fn riemann_zeta(s: f64, cfg: &EvaluationConfig) -> Result<f64> {
    hurwitz_zeta(ZetaArgument::new(s, 1.0)?, cfg)
}

/// The right-continuous step function ζ(s, ⌊u⌋ + 1), u ≥ 1.
pub fn step_hurwitz(s: f64, u: f64, cfg: &EvaluationConfig) -> Result<f64> {
    if !(u.is_finite() && u >= 1.0) {
        return Err(domain(format!(
            "step argument must be a finite real >= 1, got {u}"
        )));
    }
    hurwitz_zeta(ZetaArgument::new(s, u.floor() + 1.0)?, cfg)
}

/// ∂ζ(s, α)/∂α = −s·ζ(s+1, α).
pub fn hurwitz_du(arg: ZetaArgument, cfg: &EvaluationConfig) -> Result<f64> {
    let shifted = ZetaArgument::new(arg.s + 1.0, arg.alpha)?;
    Ok(-arg.s * hurwitz_zeta(shifted, cfg)?)
}

/// Integral-comparison envelope ζ(s, α) ≤ α^{-s} + α^{1-s}/(s-1).
pub fn hurwitz_envelope(s: f64, alpha: f64) -> f64 {
    alpha.powf(-s) + alpha.powf(1.0 - s) / (s - 1.0)
}

/// Unvalidated fast path for callers that have already checked s > 1, α > 0 and the config.
pub(crate) fn hurwitz_raw(s: f64, alpha: f64, cfg: &EvaluationConfig) -> Result<f64> {
    euler_maclaurin(s, alpha, cfg).map(|v| v.value)
}

fn euler_maclaurin(s: f64, alpha: f64, cfg: &EvaluationConfig) -> Result<HurwitzValue> {
    let start = cfg
        .em_terms
        .max(10)
        .max((s.ceil() as usize).saturating_add(10));
    let cap = start.saturating_mul(1 << 12);
    let target = cfg.rel_tol.min(0.25 * f64::EPSILON);
    let mut n = start;
    loop {
        let (value, remainder, magnitude) = em_at(s, alpha, n, cfg.em_bernoulli_depth);
        let ok_strict = remainder <= target * value.abs();
        if ok_strict || n >= cap {
            let error_bound = remainder + 4.0 * f64::EPSILON * magnitude;
            if remainder <= cfg.rel_tol * value.abs() {
                return Ok(HurwitzValue {
                    value,
                    error_bound,
                    terms: n,
                });
            }
            return Err(ZetaError::Accuracy {
                what: format!("hurwitz_zeta({s}, {alpha}) Euler-Maclaurin remainder"),
                achieved: remainder / value.abs(),
                required: cfg.rel_tol,
            });
        }
        n = n.saturating_mul(2);
    }
}

/// k + α split exactly as hi + lo.
fn split_sum(k: usize, alpha: f64) -> (f64, f64) {
    let a = k as f64;
    let hi = a + alpha;
    let b = hi - a;
    let lo = (a - (hi - b)) + (alpha - b);
    (hi, lo)
}

/// (hi + lo)^{-s} to first order in lo; rounding of k + α would otherwise be amplified by s.
fn split_pow(hi: f64, lo: f64, s: f64) -> f64 {
    let p = hi.powf(-s);
    p - p * s * (lo / hi)
}

/// One Euler–Maclaurin evaluation with `n` direct terms; returns (value, remainder bound, Σ|parts|).
fn em_at(s: f64, alpha: f64, n: usize, depth: usize) -> (f64, f64, f64) {
    let mut acc = CompensatedSum::new();
    // smallest terms first
    for k in (0..n).rev() {
        let (hi, lo) = split_sum(k, alpha);
        acc.add(split_pow(hi, lo, s));
    }
    let direct = acc.value();
    let (x, x_lo) = split_sum(n, alpha);
    let x_pow = split_pow(x, x_lo, s);
    let integral_tail = (x * x_pow + x_lo * x_pow) / (s - 1.0);
    let half = 0.5 * x_pow;
    acc.add(integral_tail);
    acc.add(half);
    let mut magnitude = direct + integral_tail + half;

    let inv_x2 = 1.0 / (x * x);
    // (s)_{2j-1} x^{-s-2j+1}, starting at j = 1
    let mut rising = s * x_pow / x;
    let mut remainder = 0.0;
    for j in 1..=depth + 1 {
        let term = scaled_bernoulli(j) * rising;
        if j == depth + 1 || term.abs() <= 0.125 * f64::EPSILON * acc.value().abs() {
            remainder = term.abs();
            break;
        }
        acc.add(term);
        magnitude += term.abs();
        let jf = j as f64;
        rising *= (s + 2.0 * jf - 1.0) * (s + 2.0 * jf) * inv_x2;
    }
    (acc.value(), remainder, magnitude)
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
    fn riemann_small_integers() {
        let c = cfg();
        assert!(rel(riemann_zeta(2.0, &c).unwrap(), 1.6449340668482264) < 4e-16);
        assert!(rel(riemann_zeta(3.0, &c).unwrap(), 1.2020569031595943) < 4e-16);
        assert!(rel(riemann_zeta(4.0, &c).unwrap(), 1.0823232337111382) < 4e-16);
    }

    #[test]
    fn riemann_is_hurwitz_at_one_bitwise() {
        let c = cfg();
        for s in [1.01, 1.5, 2.0, 3.3, 7.0, 40.0] {
            let a = riemann_zeta(s, &c).unwrap();
            let b = hurwitz_zeta(ZetaArgument::new(s, 1.0).unwrap(), &c).unwrap();
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn shift_by_one() {
        let c = cfg();
        let z2 = hurwitz_zeta(ZetaArgument::new(2.0, 2.0).unwrap(), &c).unwrap();
        assert!(rel(z2, 0.6449340668482264) < 1e-15);
    }

    #[test]
    fn large_shift_matches_leading_asymptotic() {
        let c = cfg();
        let v = hurwitz_zeta(ZetaArgument::new(3.0, 1e6).unwrap(), &c).unwrap();
        // α^{-2}/2 + α^{-3}/2 + ...
        assert!(rel(v, 5.0e-13) < 2e-6);
        assert!(v > 5.0e-13);
    }

    #[test]
    fn step_function_values() {
        let c = cfg();
        let h = |a: f64| hurwitz_zeta(ZetaArgument::new(2.0, a).unwrap(), &c).unwrap();
        assert_eq!(step_hurwitz(2.0, 2.5, &c).unwrap(), h(3.0));
        assert!(rel(step_hurwitz(2.0, 2.5, &c).unwrap(), 0.3949340668482264) < 1e-14);
        assert_eq!(step_hurwitz(2.0, 3.0, &c).unwrap(), h(4.0));
        assert_eq!(step_hurwitz(2.0, 1.0, &c).unwrap(), h(2.0));
        // right-continuity: just below an integer stays on the previous step
        assert_eq!(step_hurwitz(2.0, 3.0 - 1e-12, &c).unwrap(), h(3.0));
    }

    #[test]
    fn derivative_examples() {
        let c = cfg();
        let d = hurwitz_du(ZetaArgument::new(2.0, 1.0).unwrap(), &c).unwrap();
        assert!(rel(d, -2.4041138063191886) < 1e-15);
        let d = hurwitz_du(ZetaArgument::new(3.0, 2.0).unwrap(), &c).unwrap();
        let expected = -3.0 * hurwitz_zeta(ZetaArgument::new(4.0, 2.0).unwrap(), &c).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let c = cfg();
        let h = 1e-6;
        let f = |a: f64| hurwitz_zeta(ZetaArgument::new(2.0, a).unwrap(), &c).unwrap();
        let fd = (f(1.0 + h) - f(1.0 - h)) / (2.0 * h);
        let d = hurwitz_du(ZetaArgument::new(2.0, 1.0).unwrap(), &c).unwrap();
        assert!(rel(fd, d) < 1e-8);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            ZetaArgument::new(1.0, 1.0),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            ZetaArgument::new(0.5, 1.0),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            ZetaArgument::new(2.0, 0.0),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            ZetaArgument::new(2.0, -1.0),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            ZetaArgument::new(f64::NAN, 1.0),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            ZetaArgument::new(2.0, f64::INFINITY),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            riemann_zeta(1.0, &cfg()),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            step_hurwitz(2.0, 0.5, &cfg()),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            step_hurwitz(1.0, 2.0, &cfg()),
            Err(ZetaError::Domain(_))
        ));
    }

    #[test]
    fn near_pole_surfaces_bound() {
        let c = cfg();
        let v = hurwitz_zeta_bounded(ZetaArgument::new(1.0 + 1e-6, 1.0).unwrap(), &c).unwrap();
        // ζ(1+ε) = 1/ε + γ + O(ε)
        assert!(rel(v.value, 1e6 + 0.5772156649015329) < 1e-9);
        assert!(v.error_bound > 0.0 && v.error_bound < 1e-6 * v.value);
    }

    #[test]
    fn strict_tolerance_unreachable_is_an_accuracy_error() {
        // depth 1 with the minimum term count cannot reach 1e-15 for tiny s - 1
        let c = EvaluationConfig {
            em_bernoulli_depth: 1,
            em_terms: 1,
            rel_tol: 1e-300_f64.max(f64::MIN_POSITIVE),
            ..EvaluationConfig::default()
        };
        let r = hurwitz_zeta(ZetaArgument::new(1.5, 1.0).unwrap(), &c);
        assert!(matches!(r, Err(ZetaError::Accuracy { .. })), "{r:?}");
    }

    #[test]
    fn envelope_bounds_value() {
        let c = cfg();
        for (s, a) in [(1.5, 1.0), (2.0, 0.3), (6.0, 12.5)] {
            let v = hurwitz_zeta(ZetaArgument::new(s, a).unwrap(), &c).unwrap();
            assert!(v <= hurwitz_envelope(s, a));
        }
    }
}
