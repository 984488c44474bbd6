//! Integral representations against the series oracles, plus regression guards
//! on the signs and argument order of the ζ₃ decomposition.

use mzeta_core::identities::{verify_even_gap, verify_tornheim_reduction, Suite};
use mzeta_core::quadrature::IntegrandFactor as F;
use mzeta_core::{
    golden, integrate_product, riemann_zeta, verify_theorem1, verify_theorem2, zeta2_integral,
    zeta2_series, zeta2_smooth_approx, zeta3_decomposition, zeta3_series, EvaluationConfig,
};

fn cfg() -> EvaluationConfig {
    EvaluationConfig::default()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn every_default_check_passes() {
    for check in Suite::All.default_checks() {
        let r = check.run(&cfg()).unwrap();
        assert!(r.passed, "{r:?}");
    }
}

#[test]
fn stepped_integral_matches_golden() {
    let v = zeta2_integral(3.0, 2.0, &cfg()).unwrap();
    let g = golden::lookup("zeta2", &[3.0, 2.0]).unwrap().value;
    assert!(rel(v, g) <= 1e-8);
    let v = zeta2_integral(2.0, 2.0, &cfg()).unwrap();
    assert!(rel(v, 0.8117424252833536) <= 1e-8);
}

#[test]
fn smooth_gap_is_bounded_and_decreasing() {
    let mut previous = f64::INFINITY;
    for s2 in [2.0, 4.0, 10.0] {
        let a = zeta2_smooth_approx(2.0, s2, &cfg()).unwrap();
        assert!(a.a_value > 0.0 && a.a_value <= a.a_bound);
        assert!(a.a_value < previous);
        previous = a.a_value;
    }
}

#[test]
fn report_shape() {
    let r = verify_theorem1(2.0, 4.0, &cfg()).unwrap();
    assert!(r.detail.contains_key("approx_closed_form"));
    assert_eq!(r.detail["a_nonnegative"], 1.0);
    assert_eq!(r.detail["a_within_bound"], 1.0);
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["identity"], "theorem1");
}

#[test]
fn decomposition_detail_sums_to_lhs() {
    for (a, b, c) in [(2.0, 2.0, 2.0), (3.0, 2.0, 4.0)] {
        let r = verify_theorem2(a, b, c, &cfg()).unwrap();
        let scale = r.detail.values().map(|v| v.abs()).sum::<f64>();
        assert!((r.detail_sum() - r.lhs).abs() <= 8.0 * f64::EPSILON * scale);
    }
}

/// The decomposition with one modification applied, evaluated independently of the library's term list.
fn variant(
    s1: f64,
    s2: f64,
    s3: f64,
    flip: Option<usize>,
    swap_zeta2: bool,
    swap_roles: bool,
) -> f64 {
    let c = cfg();
    let z = |s: f64| riemann_zeta(s, &c).unwrap();
    let z2 = |a: f64, b: f64| zeta2_series(a, b, &c).unwrap();
    let q = |f: &[F]| integrate_product(f, &c).unwrap().value;
    let (i_a, i_b) = if swap_roles {
        (
            q(&[F::step(s1), F::smooth(s2), F::smooth(s3 + 1.0)]),
            q(&[F::step(s1), F::smooth(s2 + 1.0), F::smooth(s3)]),
        )
    } else {
        (
            q(&[F::step(s1), F::smooth(s2 + 1.0), F::smooth(s3)]),
            q(&[F::step(s1), F::smooth(s2), F::smooth(s3 + 1.0)]),
        )
    };
    let inner = if swap_zeta2 { z2(s2, s3) } else { z2(s3, s2) };
    let mut terms = [
        z(s1) * z(s2) * z(s3),
        -z2(s1, s2 + s3),
        -z2(s1 + s2, s3),
        -z(s1) * inner,
        -z(s1 + s2 + s3),
        -s2 * i_a,
        -s3 * i_b,
        s3 * q(&[F::step(s1), F::step(s2), F::smooth(s3 + 1.0)]),
    ];
    if let Some(k) = flip {
        terms[k] = -terms[k];
    }
    terms.iter().sum()
}

#[test]
fn decomposition_signs_and_order_are_load_bearing() {
    for (a, b, c) in [(2.0, 3.0, 2.0), (3.0, 2.0, 4.0)] {
        let truth = zeta3_series(a, b, c, &cfg()).unwrap();
        let faithful = variant(a, b, c, None, false, false);
        assert!(rel(faithful, truth) < 1e-10);
        let library = zeta3_decomposition(a, b, c, &cfg()).unwrap().value;
        assert!(rel(library, faithful) < 1e-12);
        for k in 0..8 {
            let broken = variant(a, b, c, Some(k), false, false);
            assert!(
                rel(broken, truth) > 1e-4,
                "sign of term {k} at ({a},{b},{c})"
            );
        }
        assert!(rel(variant(a, b, c, None, true, false), truth) > 1e-4);
        assert!(rel(variant(a, b, c, None, false, true), truth) > 1e-4);
    }
}

#[test]
fn even_gap_and_tornheim_checks() {
    for (a, b) in [(2.0, 4.0), (2.0, 6.0), (3.0, 5.0)] {
        let r = verify_even_gap(a, b, &cfg()).unwrap();
        assert!(r.passed && r.rel_err <= 1e-9, "{r:?}");
    }
    let r = verify_tornheim_reduction(2.0, 3.0, &cfg()).unwrap();
    assert!(r.passed);
}

#[test]
fn stepped_integral_at_s1_equal_one() {
    let z3 = riemann_zeta(3.0, &cfg()).unwrap();
    assert!(rel(zeta2_integral(1.0, 2.0, &cfg()).unwrap(), z3) <= 1e-8);
    let z2 = riemann_zeta(2.0, &cfg()).unwrap();
    for s2 in [2.0, 3.0, 6.0] {
        let a = zeta2_smooth_approx(1.0, s2, &cfg()).unwrap();
        assert!(a.a_value >= 0.0 && a.a_value <= z2 / (s2 - 1.0));
    }
}
