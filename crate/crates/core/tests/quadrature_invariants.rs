//! Quadrature error honesty and integrand ordering.

use mzeta_core::quadrature::{integrate_product_fixed, IntegrandFactor as F};
use mzeta_core::{integrate_product, EvaluationConfig};

fn cfg() -> EvaluationConfig {
    EvaluationConfig::default()
}

fn products() -> Vec<Vec<F>> {
    vec![
        vec![F::smooth(2.0), F::smooth(3.0)],
        vec![F::smooth(3.0), F::step(2.0)],
        vec![F::smooth(2.5), F::step(1.5)],
        vec![F::step(2.0), F::smooth(3.0), F::smooth(2.0)],
        vec![F::step(2.0), F::step(3.0), F::smooth(3.0)],
        vec![F::smooth(1.5), F::smooth(1.5), F::smooth(2.5)],
        vec![F::shifted(2.0), F::smooth(4.0)],
    ]
}

#[test]
fn reported_error_covers_refined_reference() {
    let fine = cfg().with_quad_order(40);
    for factors in products() {
        for segments in [4, 8, 16] {
            let coarse = integrate_product_fixed(&factors, &cfg(), segments).unwrap();
            let reference = integrate_product_fixed(&factors, &fine, 8 * segments).unwrap();
            let actual = (coarse.value - reference.value).abs();
            assert!(
                actual <= coarse.total_error() + reference.total_error(),
                "{factors:?} N={segments}: actual {actual:e} reported {:e}",
                coarse.total_error()
            );
        }
    }
}

#[test]
fn adaptive_result_meets_its_tolerance() {
    for factors in products() {
        let q = integrate_product(&factors, &cfg()).unwrap();
        assert!(
            q.total_error() <= q.tolerance * q.value.abs(),
            "{factors:?}: {q:?}"
        );
        let reference = integrate_product_fixed(
            &factors,
            &cfg().with_quad_order(40),
            2 * q.segments_used.max(16),
        )
        .unwrap();
        assert!((q.value - reference.value).abs() <= q.tolerance * q.value.abs());
    }
}

#[test]
fn smooth_step_shifted_ordering() {
    for (a, b) in [(2.0, 2.0), (3.0, 1.5), (2.0, 6.0)] {
        let smooth = integrate_product(&[F::smooth(a), F::smooth(b)], &cfg())
            .unwrap()
            .value;
        let step = integrate_product(&[F::smooth(a), F::step(b)], &cfg())
            .unwrap()
            .value;
        let shifted = integrate_product(&[F::smooth(a), F::shifted(b)], &cfg())
            .unwrap()
            .value;
        assert!(
            smooth > step && step > shifted,
            "({a},{b}): {smooth} {step} {shifted}"
        );
    }
}

#[test]
fn deterministic() {
    for factors in products() {
        let a = integrate_product(&factors, &cfg()).unwrap();
        let b = integrate_product(&factors, &cfg()).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }
}

#[test]
fn non_integrable_products_are_rejected() {
    assert!(integrate_product(&[F::smooth(1.5)], &cfg()).is_err());
    assert!(integrate_product(&[F::power(0.5), F::smooth(1.5)], &cfg()).is_err());
    assert!(integrate_product(&[], &cfg()).is_err());
}
