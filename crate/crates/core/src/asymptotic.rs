//! Truncated expansions Σ_{m<M} c_m x^{-(λ+m)} in inverse powers of x.
//!
//! These close off every infinite tail in the crate. A summand or segment
//! integral F(n) whose large-n behaviour is captured by such an expansion has
//!
//! ```text
//! Σ_{n≥N} F(n) = Σ_m c_m ζ(λ+m, N),
//! ```
//!
//! so the tail reduces to a handful of Hurwitz values at a moderate N.

use crate::bernoulli;
use crate::config::EvaluationConfig;
use crate::error::{domain, Result};
use crate::hurwitz::hurwitz_raw;
use crate::summation::CompensatedSum;

/// Number of retained orders. Needs B_{2k} up to 2k = ORDER - 1.
pub const ORDER: usize = 24;

const _: () = assert!(ORDER <= 2 * bernoulli::MAX_INDEX);

#[derive(Debug, Clone, PartialEq)]
pub struct InversePowerSeries {
    lead: f64,
    coeffs: Vec<f64>,
}

/// Tail sum with its truncation estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailSum {
    pub value: f64,
    pub error: f64,
}

impl InversePowerSeries {
    pub fn lead(&self) -> f64 {
        self.lead
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn zero(lead: f64) -> Self {
        Self {
            lead,
            coeffs: vec![0.0; ORDER],
        }
    }

    /// x^{-p}.
    pub fn power(p: f64) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = 1.0;
        out
    }

    /// Asymptotic expansion of ζ(s, x) as x → ∞ (or of ζ(s, x + 1) when `shifted`).
    ///
    /// ζ(s, x) ~ x^{1-s}/(s-1) + x^{-s}/2 + Σ_k B_{2k}/(2k)! (s)_{2k-1} x^{-s-2k+1};
    /// the shifted form subtracts x^{-s}, flipping the sign of the half term.
    pub fn hurwitz(s: f64, shifted: bool) -> Self {
        let mut out = Self::zero(s - 1.0);
        out.coeffs[0] = 1.0 / (s - 1.0);
        out.coeffs[1] = if shifted { -0.5 } else { 0.5 };
        let mut rising = s;
        let mut k = 1;
        while 2 * k < ORDER {
            out.coeffs[2 * k] = bernoulli::scaled_bernoulli(k) * rising;
            let kf = k as f64;
            rising *= (s + 2.0 * kf - 1.0) * (s + 2.0 * kf);
            k += 1;
        }
        out
    }

    pub fn scale(mut self, factor: f64) -> Self {
        self.coeffs.iter_mut().for_each(|c| *c *= factor);
        self
    }

    /// Cauchy product, truncated to [`ORDER`] terms.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.lead + other.lead);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().take(ORDER - i).enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Adds `factor · other`, where other's leading exponent is `self.lead + offset`.
    pub fn add_scaled_offset(&mut self, other: &Self, factor: f64, offset: usize) {
        debug_assert!((other.lead - self.lead - offset as f64).abs() < 1e-9);
        for (m, &c) in other.coeffs.iter().enumerate() {
            if m + offset < ORDER {
                self.coeffs[m + offset] += factor * c;
            }
        }
    }

    /// Expansion of ∫_x^{x+1} f(u) du.
    ///
    /// ∫_x^{x+1} u^{-a} du = Σ_{j≥0} (-1)^j (a)_j/(j+1)! · x^{-a-j}, valid also at a = 1.
    pub fn segment_integral(&self) -> Self {
        let mut out = Self::zero(self.lead);
        for (m, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let a = self.lead + m as f64;
            let mut coef = 1.0;
            for j in 0..ORDER - m {
                out.coeffs[m + j] += c * coef;
                let jf = j as f64;
                coef *= -(a + jf) / (jf + 2.0);
            }
        }
        out
    }

    /// Expansion of the tail Σ_{n > x} f(n) = Σ_m c_m ζ(λ+m, x+1), requiring λ > 1.
    pub fn strict_tail(&self) -> Self {
        let mut out = Self::zero(self.lead - 1.0);
        for (m, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let h = Self::hurwitz(self.lead + m as f64, true);
            out.add_scaled_offset(&h, c, m);
        }
        out
    }

    /// Pointwise value of the truncated expansion.
    pub fn eval(&self, x: f64) -> f64 {
        let inv = 1.0 / x;
        let mut acc = CompensatedSum::new();
        let mut p = x.powf(-self.lead);
        for &c in &self.coeffs {
            acc.add(c * p);
            p *= inv;
        }
        acc.value()
    }

    /// Σ_{n≥start} f(n) through Hurwitz values.
    pub fn sum_from(&self, start: usize, cfg: &EvaluationConfig) -> Result<TailSum> {
        if self.lead <= 1.0 {
            return Err(domain(format!(
                "tail sum diverges: leading exponent {} <= 1",
                self.lead
            )));
        }
        let n = start.max(1) as f64;
        let mut acc = CompensatedSum::new();
        let mut magnitude = 0.0;
        let mut last = [0.0f64; 2];
        for (m, &c) in self.coeffs.iter().enumerate() {
            let t = if c == 0.0 {
                0.0
            } else {
                c * hurwitz_raw(self.lead + m as f64, n, cfg)?
            };
            acc.add(t);
            magnitude += t.abs();
            last = [last[1], t.abs()];
        }
        Ok(TailSum {
            value: acc.value(),
            error: 2.0 * (last[0] + last[1]) + 4.0 * f64::EPSILON * magnitude,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::{hurwitz_zeta, ZetaArgument};

    fn cfg() -> EvaluationConfig {
        EvaluationConfig::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn hurwitz_expansion_matches_engine() {
        for s in [1.5, 2.0, 3.0, 6.5] {
            for x in [20.0, 40.0, 100.5] {
                let direct = hurwitz_zeta(ZetaArgument::new(s, x).unwrap(), &cfg()).unwrap();
                let plain = InversePowerSeries::hurwitz(s, false).eval(x);
                let shifted = InversePowerSeries::hurwitz(s, true).eval(x - 1.0);
                assert!(rel(plain, direct) < 1e-14, "s={s} x={x}");
                assert!(rel(shifted, direct) < 1e-14, "s={s} x={x}");
            }
        }
    }

    #[test]
    fn segment_integral_of_powers() {
        for a in [1.0, 1.5, 2.0, 4.25] {
            let x: f64 = 30.0;
            let series = InversePowerSeries::power(a).segment_integral().eval(x);
            let exact = if a == 1.0 {
                (1.0 + 1.0 / x).ln()
            } else {
                (x.powf(1.0 - a) - (x + 1.0).powf(1.0 - a)) / (a - 1.0)
            };
            assert!(rel(series, exact) < 1e-14, "a={a}");
        }
    }

    #[test]
    fn sum_of_power_is_hurwitz() {
        let t = InversePowerSeries::power(2.5).sum_from(17, &cfg()).unwrap();
        let h = hurwitz_zeta(ZetaArgument::new(2.5, 17.0).unwrap(), &cfg()).unwrap();
        assert!(rel(t.value, h) < 1e-15);
        assert!(t.error < 1e-15 * h);
    }

    #[test]
    fn product_of_powers() {
        let p = InversePowerSeries::power(1.25).mul(&InversePowerSeries::power(0.75));
        assert_eq!(p.lead(), 2.0);
        assert_eq!(p.coeffs()[0], 1.0);
        assert!(p.coeffs()[1..].iter().all(|&c| c == 0.0));
    }

    #[test]
    fn strict_tail_matches_direct_sum() {
        // Σ_{n > x} n^{-3} = ζ(3, x + 1)
        let tail = InversePowerSeries::power(3.0).strict_tail();
        let x = 40.0;
        let exact = hurwitz_zeta(ZetaArgument::new(3.0, x + 1.0).unwrap(), &cfg()).unwrap();
        assert!(rel(tail.eval(x), exact) < 1e-14);
    }

    #[test]
    fn divergent_tail_is_rejected() {
        assert!(InversePowerSeries::power(1.0).sum_from(10, &cfg()).is_err());
    }
}
