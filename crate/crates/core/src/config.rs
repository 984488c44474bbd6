use crate::error::{Result, ZetaError};

/// Tuning knobs shared by the Hurwitz engine, the series oracles and the quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationConfig {
    /// Target relative error.
    pub rel_tol: f64,
    /// Minimum number of directly summed Euler-Maclaurin terms.
    pub em_terms: usize,
    /// Maximum number of Bernoulli correction terms (1..=15).
    pub em_bernoulli_depth: usize,
    /// Gauss-Legendre nodes per unit segment.
    pub quad_order: usize,
    /// Cap on the number of unit segments (and on series truncation points).
    pub max_segments: usize,
}

impl Default for EvaluationConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            em_terms: 10,
            em_bernoulli_depth: 15,
            quad_order: 20,
            max_segments: 4096,
        }
    }
}

impl EvaluationConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(ZetaError::Config(format!(
                "rel_tol must lie in (0, 1), got {}",
                self.rel_tol
            )));
        }
        if self.em_terms < 1 {
            return Err(ZetaError::Config("em_terms must be at least 1".into()));
        }
        if !(1..=15).contains(&self.em_bernoulli_depth) {
            return Err(ZetaError::Config(format!(
                "em_bernoulli_depth must lie in [1, 15], got {}",
                self.em_bernoulli_depth
            )));
        }
        if self.quad_order < 4 {
            return Err(ZetaError::Config(format!(
                "quad_order must be at least 4, got {}",
                self.quad_order
            )));
        }
        if self.max_segments < 8 {
            return Err(ZetaError::Config(format!(
                "max_segments must be at least 8, got {}",
                self.max_segments
            )));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_quad_order(mut self, quad_order: usize) -> Self {
        self.quad_order = quad_order;
        self
    }

    pub fn with_max_segments(mut self, max_segments: usize) -> Self {
        self.max_segments = max_segments;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        EvaluationConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_out_of_range_fields() {
        let base = EvaluationConfig::default();
        assert!(base.with_rel_tol(0.0).validate().is_err());
        assert!(base.with_rel_tol(1.0).validate().is_err());
        assert!(base.with_rel_tol(f64::NAN).validate().is_err());
        assert!(base.with_quad_order(3).validate().is_err());
        assert!(base.with_max_segments(7).validate().is_err());
        let mut cfg = base;
        cfg.em_bernoulli_depth = 16;
        assert!(cfg.validate().is_err());
        cfg.em_bernoulli_depth = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = base;
        cfg.em_terms = 0;
        assert!(cfg.validate().is_err());
    }
}
