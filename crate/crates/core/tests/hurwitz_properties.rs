//! Randomized invariants of the Hurwitz engine.

use mzeta_core::hurwitz::hurwitz_envelope;
use mzeta_core::{hurwitz_du, hurwitz_zeta, step_hurwitz, EvaluationConfig, ZetaArgument};
use proptest::prelude::*;

fn h(s: f64, alpha: f64) -> f64 {
    hurwitz_zeta(
        ZetaArgument::new(s, alpha).unwrap(),
        &EvaluationConfig::default(),
    )
    .unwrap()
}

fn exponent() -> impl Strategy<Value = f64> {
    1.05f64..24.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sandwich(s in exponent(), u in 1.0f64..1000.0) {
        let cfg = EvaluationConfig::default();
        let smooth = h(s, u);
        let step = step_hurwitz(s, u, &cfg).unwrap();
        let shifted = h(s, u + 1.0);
        prop_assert!(smooth >= step, "{smooth} < {step}");
        prop_assert!(step >= shifted, "{step} < {shifted}");
    }

    #[test]
    fn shift_identity(s in exponent(), alpha in 0.01f64..1000.0) {
        // α + 1 must be exact, or its rounding (amplified by s) swamps the comparison
        let alpha = (alpha + 1.0) - 1.0;
        let base = h(s, alpha);
        let term = alpha.powf(-s);
        let next = h(s, alpha + 1.0);
        // ulp scale of the operands of ζ(s,α) − α^{-s}
        let scale = base.max(term).max(next);
        prop_assert!((next - (base - term)).abs() <= 4.0 * f64::EPSILON * scale,
            "diff {} scale {}", next - (base - term), scale);
    }

    #[test]
    fn strictly_decreasing(s in exponent(), a in 0.01f64..500.0, ratio in 1.000_001f64..4.0) {
        prop_assert!(h(s, a) > h(s, a * ratio));
    }

    #[test]
    fn decay_bound(s in exponent(), alpha in 0.01f64..1e6) {
        prop_assert!(h(s, alpha) <= hurwitz_envelope(s, alpha));
    }

    #[test]
    fn derivative_vs_finite_difference(s in exponent(), alpha in 0.1f64..100.0) {
        let cfg = EvaluationConfig::default();
        let d = hurwitz_du(ZetaArgument::new(s, alpha).unwrap(), &cfg).unwrap();
        let step = 1e-5 * alpha;
        let fd = (h(s, alpha + step) - h(s, alpha - step)) / (2.0 * step);
        prop_assert!(((fd - d) / d).abs() <= 1e-6, "{d} vs {fd}");
    }
}
