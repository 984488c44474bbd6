//! ∫₁^∞ Π f_i(u) du for products of Hurwitz, stepped-Hurwitz and power factors.
//!
//! The integrand is analytic on every [n, n+1) (step factors are constants
//! there), so each unit segment gets a fixed Gauss–Legendre rule, with the
//! error taken from a second rule of order 3q/2. Segments n = 1..N−1 are
//! integrated directly; the tail Σ_{n≥N} ∫_n^{n+1} is closed off by expanding
//! the segment integral in inverse powers of n and summing the expansion
//! against Hurwitz values.

use std::fmt;

use crate::asymptotic::InversePowerSeries;
use crate::config::EvaluationConfig;
use crate::error::{domain, Result, ZetaError};
use crate::gauss::GaussLegendre;
use crate::hurwitz::{check_exponent, hurwitz_envelope, hurwitz_raw, riemann_zeta};
use crate::summation::CompensatedSum;

/// Tail exponent (decay − 1) at or below which the required tolerance is relaxed.
pub const SLOW_DECAY_THRESHOLD: f64 = 1.25;
/// Required relative tolerance in the slow-decay regime.
pub const SLOW_DECAY_TOL: f64 = 1e-6;
const FIRST_SEGMENT_COUNT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// ζ(s, u)
    Smooth,
    /// ζ(s, ⌊u⌋ + 1)
    Step,
    /// ζ(s, u + 1)
    Shifted,
    /// u^{-p}
    Power,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrandFactor {
    pub kind: FactorKind,
    pub exponent: f64,
}

impl IntegrandFactor {
    pub fn smooth(s: f64) -> Self {
        Self {
            kind: FactorKind::Smooth,
            exponent: s,
        }
    }

    pub fn step(s: f64) -> Self {
        Self {
            kind: FactorKind::Step,
            exponent: s,
        }
    }

    pub fn shifted(s: f64) -> Self {
        Self {
            kind: FactorKind::Shifted,
            exponent: s,
        }
    }

    pub fn power(p: f64) -> Self {
        Self {
            kind: FactorKind::Power,
            exponent: p,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            FactorKind::Power => {
                if self.exponent.is_finite() && self.exponent > 0.0 {
                    Ok(())
                } else {
                    Err(domain(format!(
                        "power factor needs a finite exponent > 0, got {}",
                        self.exponent
                    )))
                }
            }
            _ => check_exponent(self.exponent),
        }
    }

    /// Algebraic decay rate of the factor as u → ∞.
    pub fn decay(&self) -> f64 {
        match self.kind {
            FactorKind::Power => self.exponent,
            _ => self.exponent - 1.0,
        }
    }

    /// Pointwise upper bound used for the crude tail envelope.
    fn envelope(&self, u: f64) -> f64 {
        match self.kind {
            FactorKind::Power => u.powf(-self.exponent),
            FactorKind::Smooth | FactorKind::Step => hurwitz_envelope(self.exponent, u),
            FactorKind::Shifted => hurwitz_envelope(self.exponent, u + 1.0),
        }
    }
}

impl fmt::Display for IntegrandFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.exponent;
        match self.kind {
            FactorKind::Smooth => write!(f, "zeta({s},u)"),
            FactorKind::Step => write!(f, "zeta({s},[u]+1)"),
            FactorKind::Shifted => write!(f, "zeta({s},u+1)"),
            FactorKind::Power => write!(f, "u^-{s}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Σ over segments of |G_q − G_{3q/2}| plus a rounding allowance.
    pub quad_error: f64,
    /// Truncation estimate for the expanded tail beyond the last segment.
    pub tail_bound: f64,
    pub segments_used: usize,
    /// Relative tolerance the result is certified against (relaxed for slow decay).
    pub tolerance: f64,
    /// Crude envelope ∫_N^∞ Π bound_i of the mass handed to the tail expansion.
    pub tail_envelope: f64,
}

impl QuadratureResult {
    pub fn total_error(&self) -> f64 {
        self.quad_error + self.tail_bound
    }
}

/// Σ_i d_i for the product; integrability at ∞ requires this to exceed 1.
pub fn decay_exponent(factors: &[IntegrandFactor]) -> f64 {
    factors.iter().map(IntegrandFactor::decay).sum()
}

fn validate_factors(factors: &[IntegrandFactor]) -> Result<()> {
    if factors.is_empty() {
        return Err(domain("integrand needs at least one factor"));
    }
    for f in factors {
        f.validate()?;
    }
    let decay = decay_exponent(factors);
    if decay <= 1.0 {
        return Err(domain(format!(
            "integrand decays like u^-{decay}; need a decay exponent > 1"
        )));
    }
    Ok(())
}

/// ∫₁^∞ Π factors du with adaptive segment count.
pub fn integrate_product(
    factors: &[IntegrandFactor],
    cfg: &EvaluationConfig,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    validate_factors(factors)?;
    let mut engine = Engine::new(factors, cfg);
    let required = required_tolerance(factors, cfg);
    let cap = cfg.max_segments;
    let mut n = FIRST_SEGMENT_COUNT.min(cap);
    loop {
        let result = engine.evaluate(n, required)?;
        let budget = 0.5 * cfg.rel_tol * result.value.abs();
        let quad_stuck = result.quad_error > budget;
        if (result.tail_bound <= budget && !quad_stuck) || n >= cap || quad_stuck {
            return certify(result, factors);
        }
        n = (2 * n).min(cap);
    }
}

/// ∫₁^∞ Π factors du with exactly `segments` directly integrated unit segments.
pub fn integrate_product_fixed(
    factors: &[IntegrandFactor],
    cfg: &EvaluationConfig,
    segments: usize,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    validate_factors(factors)?;
    if segments < 2 {
        return Err(ZetaError::Config("need at least two segments".into()));
    }
    let required = required_tolerance(factors, cfg);
    Engine::new(factors, cfg).evaluate(segments, required)
}

fn required_tolerance(factors: &[IntegrandFactor], cfg: &EvaluationConfig) -> f64 {
    if decay_exponent(factors) - 1.0 <= SLOW_DECAY_THRESHOLD {
        cfg.rel_tol.max(SLOW_DECAY_TOL)
    } else {
        cfg.rel_tol
    }
}

fn certify(result: QuadratureResult, factors: &[IntegrandFactor]) -> Result<QuadratureResult> {
    let achieved = result.total_error() / result.value.abs();
    if achieved <= result.tolerance {
        Ok(result)
    } else {
        let names: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
        Err(ZetaError::Accuracy {
            what: format!(
                "integral of {} over [1, inf) with {} segments",
                names.join("*"),
                result.segments_used
            ),
            achieved,
            required: result.tolerance,
        })
    }
}

struct Segment {
    value: f64,
    error: f64,
}

struct Engine<'a> {
    factors: &'a [IntegrandFactor],
    cfg: &'a EvaluationConfig,
    low: GaussLegendre,
    high: GaussLegendre,
    tail: InversePowerSeries,
    segments: Vec<Segment>,
}

impl<'a> Engine<'a> {
    fn new(factors: &'a [IntegrandFactor], cfg: &'a EvaluationConfig) -> Self {
        let q = cfg.quad_order;
        Self {
            factors,
            cfg,
            low: GaussLegendre::new(q),
            high: GaussLegendre::new(q + (q / 2).max(2)),
            tail: tail_expansion(factors),
            segments: Vec::new(),
        }
    }

    /// Integrand at u, with the step factors already folded into `step`.
    fn smooth_part(&self, u: f64) -> Result<f64> {
        let mut prod = 1.0;
        for f in self.factors {
            prod *= match f.kind {
                FactorKind::Smooth => hurwitz_raw(f.exponent, u, self.cfg)?,
                FactorKind::Shifted => hurwitz_raw(f.exponent, u + 1.0, self.cfg)?,
                FactorKind::Power => u.powf(-f.exponent),
                FactorKind::Step => 1.0,
            };
        }
        Ok(prod)
    }

    fn segment(&self, n: usize) -> Result<Segment> {
        let a = n as f64;
        let mut step = 1.0;
        for f in self.factors.iter().filter(|f| f.kind == FactorKind::Step) {
            step *= hurwitz_raw(f.exponent, a + 1.0, self.cfg)?;
        }
        let lo = self
            .low
            .try_integrate(a, a + 1.0, |u| self.smooth_part(u))?;
        let hi = self
            .high
            .try_integrate(a, a + 1.0, |u| self.smooth_part(u))?;
        Ok(Segment {
            value: step * hi,
            error: step * (hi - lo).abs(),
        })
    }

    fn evaluate(&mut self, n: usize, required: f64) -> Result<QuadratureResult> {
        while self.segments.len() + 1 < n {
            let next = self.segments.len() + 1;
            let seg = self.segment(next)?;
            self.segments.push(seg);
        }
        let mut acc = CompensatedSum::new();
        let mut err = CompensatedSum::new();
        let mut magnitude = 0.0;
        for seg in &self.segments[..n - 1] {
            acc.add(seg.value);
            err.add(seg.error);
            magnitude += seg.value.abs();
        }
        let tail = self.tail.sum_from(n, self.cfg)?;
        acc.add(tail.value);
        magnitude += tail.value.abs();
        let envelope = self.envelope(n)?;
        Ok(QuadratureResult {
            value: acc.value(),
            quad_error: err.value() + 8.0 * f64::EPSILON * magnitude,
            tail_bound: tail.error,
            segments_used: n - 1,
            tolerance: required,
            tail_envelope: envelope,
        })
    }

    /// ∫_N^∞ Π bound_i(u) du, integrated over u = N/t with a Gauss rule in t ∈ (0, 1].
    fn envelope(&self, n: usize) -> Result<f64> {
        let nf = n as f64;
        let decay = decay_exponent(self.factors);
        // u = N t^{-1/(decay-1)} maps the algebraic tail onto a bounded, smooth t-integrand
        let k = 1.0 / (decay - 1.0);
        let value = self.high.integrate(0.0, 1.0, |t| {
            let u = nf * t.powf(-k);
            let du_dt = k * u / t;
            let prod: f64 = self.factors.iter().map(|f| f.envelope(u)).product();
            prod * du_dt
        });
        Ok(value)
    }
}

/// Expansion in 1/n of ∫_n^{n+1} Π factors du for integer n.
fn tail_expansion(factors: &[IntegrandFactor]) -> InversePowerSeries {
    let mut smooth = InversePowerSeries::power(0.0);
    let mut steps = InversePowerSeries::power(0.0);
    for f in factors {
        match f.kind {
            FactorKind::Smooth => {
                smooth = smooth.mul(&InversePowerSeries::hurwitz(f.exponent, false))
            }
            FactorKind::Shifted => {
                smooth = smooth.mul(&InversePowerSeries::hurwitz(f.exponent, true))
            }
            FactorKind::Power => smooth = smooth.mul(&InversePowerSeries::power(f.exponent)),
            // ζ(s, [u]+1) = ζ(s, n+1) on [n, n+1)
            FactorKind::Step => steps = steps.mul(&InversePowerSeries::hurwitz(f.exponent, true)),
        }
    }
    smooth.segment_integral().mul(&steps)
}

/// I(a, b) = ∫₁^∞ ζ(a,u) ζ(b,u) du for b − a an odd positive integer.
///
/// Integrating by parts with ζ(b,u) = −(b−1)^{-1} ∂_u ζ(b−1,u):
///
/// ```text
/// I(a, b) = ζ(a)ζ(b−1)/(b−1) − a/(b−1) · I(a+1, b−1),
/// ```
///
/// down to I(s, s+1) = ζ(s)²/(2s).
pub fn smooth_pair_closed_form(a: f64, b: f64, cfg: &EvaluationConfig) -> Result<f64> {
    check_exponent(a)?;
    let gap = odd_gap(a, b).ok_or_else(|| {
        domain(format!(
            "closed form needs b - a to be an odd positive integer, got a={a}, b={b}"
        ))
    })?;
    let mut x = a;
    let mut y = a + gap as f64;
    let mut coef = 1.0;
    let mut acc = CompensatedSum::new();
    for _ in 0..(gap - 1) / 2 {
        acc.add(coef * riemann_zeta(x, cfg)? * riemann_zeta(y - 1.0, cfg)? / (y - 1.0));
        coef *= -x / (y - 1.0);
        x += 1.0;
        y -= 1.0;
    }
    let z = riemann_zeta(x, cfg)?;
    acc.add(coef * z * z / (2.0 * x));
    Ok(acc.value())
}

/// The odd positive integer b − a, if it is one (to within 1e-9).
pub fn odd_gap(a: f64, b: f64) -> Option<u32> {
    let gap = b - a;
    if !gap.is_finite() || !(0.5..=1e6).contains(&gap) {
        return None;
    }
    let k = gap.round();
    if (gap - k).abs() > 1e-9 * k.max(1.0) || (k as u64).is_multiple_of(2) {
        return None;
    }
    Some(k as u32)
}
