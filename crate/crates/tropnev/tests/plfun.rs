//! Piecewise-linear layer cross-checks: evaluation against a raw loop,
//! symbolic slicing against the black-box localizer, and the exact
//! transform identities.

mod support;

use support::{dyadic_grid, naive_value};
use tropnev::{
    blackbox_slice, classify_point, corpus, make_quadrature, ray_slice, BlackboxConfig,
    Monomial, PointKind, TropicalNumber, TropicalPolynomial, TropicalRational,
};

fn raw_terms(p: &tropnev::TropicalPolynomial) -> Vec<(f64, Vec<f64>)> {
    p.terms()
        .iter()
        .map(|m| (m.coeff.as_finite().unwrap(), m.expo.clone()))
        .collect()
}

#[test]
fn evaluation_matches_the_raw_term_loop_bitwise() {
    let xs1 = dyadic_grid(8.0, 65);
    for f in corpus::standard_1d() {
        let (num, den) = (raw_terms(f.num()), raw_terms(f.den()));
        for &x in &xs1 {
            let expected = naive_value(&num, &[x]) - naive_value(&den, &[x]);
            assert_eq!(f.value(&[x]), expected);
        }
    }
    let xs2 = dyadic_grid(8.0, 17);
    for f in corpus::standard_2d() {
        let (num, den) = (raw_terms(f.num()), raw_terms(f.den()));
        for &x in &xs2 {
            for &y in &xs2 {
                let expected = naive_value(&num, &[x, y]) - naive_value(&den, &[x, y]);
                assert_eq!(f.value(&[x, y]), expected);
            }
        }
    }
}

#[test]
fn slices_reconstruct_the_function_along_the_ray() {
    let ts = dyadic_grid(16.0, 129);
    for f in corpus::standard_1d().iter().take(50) {
        let slice = ray_slice(f, &[1.0], 16.0, 1e-9);
        for &t in &ts {
            let direct = f.value(&[t]);
            let rebuilt = slice.value_at(t);
            assert!(
                (direct - rebuilt).abs() <= 1e-12 * (1.0 + direct.abs()),
                "slice mismatch at t={t}: {direct} vs {rebuilt}"
            );
        }
    }
    // A 2-D diagonal ray exercises the dot products.
    let dir = [0.6, 0.8];
    for f in corpus::standard_2d().iter().take(20) {
        let slice = ray_slice(f, &dir, 16.0, 1e-9);
        for &t in &ts {
            let direct = f.value(&[t * dir[0], t * dir[1]]);
            let rebuilt = slice.value_at(t);
            assert!(
                (direct - rebuilt).abs() <= 1e-12 * (1.0 + direct.abs()),
                "slice mismatch at t={t}: {direct} vs {rebuilt}"
            );
        }
    }
}

#[test]
fn blackbox_localizer_recovers_the_symbolic_breakpoints() {
    let cfg = BlackboxConfig::default();
    for f in corpus::standard_1d().iter().take(40) {
        let symbolic = ray_slice(f, &[1.0], 40.0, 1e-9);
        let probed = blackbox_slice(|t| f.value(&[t]), -40.0, 40.0, &cfg).unwrap();
        assert_eq!(
            symbolic.breakpoints.len(),
            probed.breakpoints.len(),
            "breakpoint count differs"
        );
        for (s, p) in symbolic.breakpoints.iter().zip(&probed.breakpoints) {
            assert!((s.t - p.t).abs() < 1e-4, "position {} vs {}", s.t, p.t);
            assert!((s.jump - p.jump).abs() < 1e-4, "jump {} vs {}", s.jump, p.jump);
        }
    }
}

#[test]
fn pole_breakpoints_classify_as_poles() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    for f in corpus::with_poles_1d().iter().take(25) {
        let slice = ray_slice(f, &[1.0], 40.0, 1e-9);
        for bp in slice.poles() {
            let class = classify_point(f, &[bp.t], &quad, 1e-9).unwrap();
            assert_eq!(class.kind, PointKind::Pole, "at t = {}", bp.t);
            assert!(class.multiplicity > 0.0);
        }
    }
}

#[test]
fn shift_and_rescale_are_exact_symbolic_transforms() {
    let xs = dyadic_grid(4.0, 33);
    for f in corpus::standard_1d().iter().take(50) {
        let shifted = f.shift(&[1.5]).unwrap();
        let scaled = f.q_scale(2.0).unwrap();
        for &x in &xs {
            assert!(
                (shifted.value(&[x]) - f.value(&[x + 1.5])).abs() <= 1e-12,
                "shift mismatch at {x}"
            );
            assert_eq!(scaled.value(&[x]), f.value(&[2.0 * x]));
        }
    }
}

#[test]
fn json_round_trips_preserve_polynomials_and_rationals() {
    for f in corpus::standard_1d().iter().take(20) {
        let text = serde_json::to_string(f).unwrap();
        let back: TropicalRational = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, f);

        let poly_text = serde_json::to_string(f.num()).unwrap();
        let poly_back: TropicalPolynomial = serde_json::from_str(&poly_text).unwrap();
        assert_eq!(&poly_back, f.num());
    }
    // The documented wire shape: a term array with "c"/"m" fields.
    let f = corpus::standard_2d()[0].clone();
    let doc: serde_json::Value = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
    assert!(doc["dim"].is_u64());
    assert!(doc["num"][0]["c"].is_number() || doc["num"][0]["c"].is_string());
    assert!(doc["num"][0]["m"].is_array());
}

#[test]
fn blackbox_merges_breakpoints_below_its_resolution() {
    // Two unit-jump kinks 1e-8 apart merge into one double-jump report.
    let f = TropicalRational::new(
        TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(TropicalNumber::from_finite(0.0), vec![0.0]),
                Monomial::new(TropicalNumber::from_finite(-1.0), vec![1.0]),
                Monomial::new(TropicalNumber::from_finite(-2.0 - 1e-8), vec![2.0]),
            ],
        )
        .unwrap(),
        TropicalPolynomial::one(1),
    )
    .unwrap();
    let probed = blackbox_slice(|t| f.value(&[t]), -4.0, 4.0, &BlackboxConfig::default()).unwrap();
    assert_eq!(probed.breakpoints.len(), 1);
    assert!((probed.breakpoints[0].t - 1.0).abs() < 1e-4);
    assert!((probed.breakpoints[0].jump - 2.0).abs() < 1e-4);
}

#[test]
fn blackbox_budget_exhaustion_is_an_error_not_a_hang() {
    let cfg = BlackboxConfig {
        max_evals: 50,
        ..BlackboxConfig::default()
    };
    let f = corpus::standard_1d()[0].clone();
    let err = blackbox_slice(|t| f.value(&[t]), -10.0, 10.0, &cfg).unwrap_err();
    let text = err.to_string();
    assert!(text.contains("budget"), "unexpected error: {text}");
}
