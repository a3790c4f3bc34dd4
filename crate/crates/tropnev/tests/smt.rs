//! Shift-family and inequality-report checks: exact shift covariance,
//! Casorati determinants against the permutation oracle, root-counting
//! scaling under tropical powers, essential-term bookkeeping, input
//! validation, and the rendered report shapes.

mod support;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropnev::{
    casorati_roots_counting, compose, corpus, counting, ddg, defect_relation_check,
    essential_terms, make_quadrature, q_smt_check, smt_check, CombinationBasis, DdgEstimate,
    Monomial, ShiftFamily, ShiftStep, SmtError, TropicalNumber, TropicalPolynomial,
    TropicalRational,
};

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

fn line(slope: f64, level: f64) -> TropicalPolynomial {
    TropicalPolynomial::new(1, vec![Monomial::new(fin(level), vec![slope])]).unwrap()
}

#[test]
fn shift_families_apply_their_step_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x736d_7431);
    let base: Vec<TropicalPolynomial> = corpus::standard_1d()
        .iter()
        .take(3)
        .map(|f| f.num().clone())
        .collect();
    let translated = ShiftFamily::new(base.clone(), ShiftStep::Translate(vec![0.75])).unwrap();
    let scaled = ShiftFamily::new(base.clone(), ShiftStep::Scale(2.0)).unwrap();
    for _ in 0..100 {
        let x = rng.gen_range(-8.0..8.0);
        let tm = translated.matrix_at(&[x]).unwrap();
        let sm = scaled.matrix_at(&[x]).unwrap();
        for (i, g) in base.iter().enumerate() {
            for j in 0..base.len() {
                let want_t = g.value(&[x + 0.75 * j as f64]);
                let got_t = tm.get(i, j).as_finite().unwrap();
                assert!((got_t - want_t).abs() <= 1e-12 * (1.0 + want_t.abs()));
                let want_s = g.value(&[2f64.powi(j as i32) * x]);
                let got_s = sm.get(i, j).as_finite().unwrap();
                assert!((got_s - want_s).abs() <= 1e-12 * (1.0 + want_s.abs()));
            }
        }
    }
}

#[test]
fn casorati_determinants_match_the_permutation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x736d_7432);
    let polys: Vec<TropicalPolynomial> = corpus::standard_1d()
        .iter()
        .take(4)
        .map(|f| f.num().clone())
        .collect();
    for order in 2..=4usize {
        let family =
            ShiftFamily::new(polys[..order].to_vec(), ShiftStep::Translate(vec![0.5])).unwrap();
        for _ in 0..200 {
            let x = [rng.gen_range(-8.0..8.0)];
            let matrix = family.matrix_at(&x).unwrap();
            let rows: Vec<Vec<f64>> = (0..order)
                .map(|i| {
                    (0..order)
                        .map(|j| matrix.get(i, j).as_finite().unwrap())
                        .collect()
                })
                .collect();
            let det = family.casorati_eval(&x).unwrap().as_finite().unwrap();
            let oracle = support::perm_det(&rows);
            assert!(
                (det - oracle).abs() <= 1e-12 * (1.0 + oracle.abs()),
                "det {det} vs oracle {oracle} at {x:?}"
            );
        }
    }
}

#[test]
fn casorati_root_counting_matches_the_envelope_route() {
    // Base {max(x, 0), 0} with unit translate: the determinant is
    // max(x + 1, 0), one root kink, so N(r) = (r - 1)/2.
    let quad = make_quadrature(1, 2, 0).unwrap();
    let base = vec![
        TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(fin(0.0), vec![1.0]),
                Monomial::new(fin(0.0), vec![0.0]),
            ],
        )
        .unwrap(),
        TropicalPolynomial::constant(1, 0.0),
    ];
    let family = ShiftFamily::new(base, ShiftStep::Translate(vec![1.0])).unwrap();
    let envelope = TropicalRational::entire(
        TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(fin(1.0), vec![1.0]),
                Monomial::new(fin(0.0), vec![0.0]),
            ],
        )
        .unwrap(),
    );
    for &r in &[2.0, 10.0, 50.0] {
        let probed = casorati_roots_counting(&family, r, &quad).unwrap();
        let symbolic = counting(&envelope.recip(), r, &quad);
        assert!((probed - (r - 1.0) / 2.0).abs() <= 1e-6, "N({r}) = {probed}");
        assert!((probed - symbolic).abs() <= 1e-6);
    }
}

#[test]
fn tropical_powers_scale_root_counting_linearly() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    for (p, f) in corpus::hypersurface_pairs_1d().iter().take(8) {
        let g = TropicalRational::entire(compose(p, f).unwrap());
        let gk = TropicalRational::entire(compose(&p.pow(3).unwrap(), f).unwrap());
        for &r in &[4.0, 16.0] {
            let n1 = counting(&g.recip(), r, &quad);
            let n3 = counting(&gk.recip(), r, &quad);
            assert!(
                (n3 - 3.0 * n1).abs() <= 1e-9 * (1.0 + n3.abs()),
                "N scaling broke: {n3} vs 3 x {n1}"
            );
        }
    }
}

#[test]
fn essential_terms_respond_to_coefficient_edits() {
    let basis = vec![line(1.0, 0.0), line(0.0, 0.0), line(1.0, -10.0)];

    // The third line sits strictly under the first: two essential terms.
    let comb = CombinationBasis::new(basis.clone(), vec![fin(0.0); 3]).unwrap();
    let ess = essential_terms(&comb, 64);
    assert_eq!(ess.witnessed, vec![0, 1]);
    assert!(ess.certified_exact);
    assert_eq!((ess.min_length(), ess.max_length()), (2, 2));

    // Raising the buried coefficient lifts that term into the envelope.
    let raised =
        CombinationBasis::new(basis.clone(), vec![fin(0.0), fin(0.0), fin(20.0)]).unwrap();
    let ess = essential_terms(&raised, 64);
    assert!(ess.witnessed.contains(&2));
    assert_eq!(ess.finite_count, 3);

    // Dropping a coefficient to bottom removes the term outright.
    let dropped = CombinationBasis::new(
        basis,
        vec![TropicalNumber::BOTTOM, fin(0.0), fin(20.0)],
    )
    .unwrap();
    let ess = essential_terms(&dropped, 64);
    assert_eq!(ess.finite_count, 2);
    assert_eq!(ess.witnessed, vec![1, 2]);
    assert!(ess.certified_exact);
}

#[test]
fn degeneracy_counting_uses_interval_semantics() {
    let basis = vec![line(1.0, 0.0), line(0.0, 0.0)];
    let full = CombinationBasis::new(basis.clone(), vec![fin(0.0), fin(0.0)]).unwrap();
    let short = CombinationBasis::new(basis, vec![fin(0.0), TropicalNumber::BOTTOM]).unwrap();
    let est = ddg(&[full, short], 2, 64);
    assert_eq!(est, DdgEstimate { lower: 1, upper: 1 });
}

#[test]
fn multiplicative_reports_validate_grid_and_scale() {
    let (f, ps) = support::corollary_instance();
    let quad = make_quadrature(1, 2, 0).unwrap();
    assert!(matches!(
        q_smt_check(&f, &ps, 2.0, &[1.0, 2.0, 3.0], &quad),
        Err(SmtError::DegenerateGrid(_))
    ));
    for bad in [0.0, 1.0] {
        assert!(matches!(
            q_smt_check(&f, &ps, bad, &[1.0, 2.0, 4.0], &quad),
            Err(SmtError::BadShift(_))
        ));
    }
    let grid: Vec<f64> = (0..=10).map(|k| 2f64.powi(k)).collect();
    let report = q_smt_check(&f, &ps, 2.0, &grid, &quad).unwrap();
    assert_eq!(report.lambda, (0, 0));
    assert!(!report.vacuous);
    assert!(report.rows.iter().all(|row| row.slack.is_finite()));
}

#[test]
fn additive_reports_validate_their_inputs() {
    let (f, ps) = support::corollary_instance();
    let quad = make_quadrature(1, 2, 0).unwrap();
    let grid = [1.0, 2.0, 4.0];
    assert!(matches!(
        smt_check(&f, &[], &[1.0], &grid, &quad),
        Err(SmtError::TooFewHypersurfaces { q: 0, m: 1 })
    ));
    assert!(matches!(
        smt_check(&f, &ps, &[0.0], &grid, &quad),
        Err(SmtError::BadShift(_))
    ));
    let mixed = vec![
        ps[0].clone(),
        tropnev::HomogeneousPolynomial::complete_constant(2, 1, 0.0),
    ];
    assert!(matches!(
        smt_check(&f, &mixed, &[1.0], &grid, &quad),
        Err(SmtError::MixedArity { index: 1, .. })
    ));
    // Two hypersurfaces against a two-element basis: the left side has a
    // nonpositive coefficient and the inequality is vacuous.
    let report = smt_check(&f, &ps[..2], &[1.0], &grid, &quad).unwrap();
    assert!(report.vacuous);
    assert_eq!(report.basis_size, 2);
}

#[test]
fn reports_render_the_documented_columns() {
    let (f, ps) = support::corollary_instance();
    let quad = make_quadrature(1, 2, 0).unwrap();
    let grid: Vec<f64> = (1..=10).map(|k| 10.0 * k as f64).collect();
    let report = smt_check(&f, &ps, &[1.0], &grid, &quad).unwrap();
    let csv = report.to_csv();
    assert!(
        csv.lines()
            .any(|l| l == "r,T,N_1,N_2,N_3,casN,lhs_min,lhs_max,middle,rhs,slack"),
        "bad header: {csv}"
    );
    assert_eq!(csv.lines().filter(|l| !l.starts_with('#')).count(), 11);
    let doc: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    for key in [
        "q",
        "target_dim",
        "common_degree",
        "degrees",
        "basis_size",
        "lambda",
        "vacuous",
        "quad",
        "rows",
    ] {
        assert!(!doc[key].is_null(), "missing JSON key {key}");
    }
    assert!(doc["rows"][0]["t_f"].is_number());
    assert!(doc["rows"][0]["n_j"].is_array());
}

#[test]
fn defect_relation_holds_on_the_hand_instance() {
    let (f, ps) = support::corollary_instance();
    let quad = make_quadrature(1, 2, 0).unwrap();
    let grid: Vec<f64> = (0..=24).map(|k| 10f64.powf(k as f64 / 8.0)).collect();
    let report = defect_relation_check(&f, &ps, &grid, &quad).unwrap();
    assert_eq!(report.basis_size, 2);
    assert_eq!(report.lambda, (0, 0));
    assert_eq!(report.defects.len(), 3);
    for d in &report.defects {
        assert!((0.0..0.05).contains(d), "defect {d} escapes [0, 0.05)");
    }
    assert!((report.sum_tail - report.defects[2]).abs() <= 1e-15);
    assert!(report.within_total_bound);
    assert!(report.within_tail_bound);
    let csv = report.to_csv();
    assert!(csv.lines().any(|l| l == "j,defect"));
    assert!(csv.lines().any(|l| l.starts_with("sum_tail,")));
    let doc: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert!(doc["defects"].is_array());
    assert!(doc["within_tail_bound"].is_boolean());
}
