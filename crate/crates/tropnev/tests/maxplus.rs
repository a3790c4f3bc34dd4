//! Scalar and matrix max-plus cross-checks against raw-float oracles.

mod support;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::perm_det;
use tropnev::{t_add, t_mul, verify_gm_dependence, TropicalMatrix, TropicalNumber};

type BoxedFn = Box<dyn Fn(&[f64]) -> f64>;

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

/// Dyadic random matrix rows: entries `k/8` with `|k| <= 128`, plus a
/// sprinkle of bottom entries when `with_bottom` is set.
fn random_rows(rng: &mut ChaCha8Rng, k: usize, with_bottom: bool) -> Vec<Vec<f64>> {
    (0..k)
        .map(|_| {
            (0..k)
                .map(|_| {
                    if with_bottom && rng.gen_range(0..5) == 0 {
                        f64::NEG_INFINITY
                    } else {
                        rng.gen_range(-128..=128) as f64 / 8.0
                    }
                })
                .collect()
        })
        .collect()
}

fn to_matrix(rows: &[Vec<f64>]) -> TropicalMatrix {
    TropicalMatrix::from_rows(
        &rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| {
                        if v == f64::NEG_INFINITY {
                            TropicalNumber::BOTTOM
                        } else {
                            fin(v)
                        }
                    })
                    .collect()
            })
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

#[test]
fn scalar_semiring_laws_hold_on_a_dyadic_sample() {
    let sample = [
        TropicalNumber::BOTTOM,
        fin(-2.5),
        fin(0.0),
        fin(0.125),
        fin(3.0),
    ];
    for &a in &sample {
        for &b in &sample {
            assert_eq!(t_add(a, b), t_add(b, a));
            assert_eq!(t_mul(a, b), t_mul(b, a));
            assert_eq!(t_add(a, TropicalNumber::BOTTOM), a);
            assert_eq!(t_mul(a, TropicalNumber::ONE), a);
            assert!(t_mul(a, TropicalNumber::BOTTOM).is_bottom());
            for &c in &sample {
                assert_eq!(t_add(t_add(a, b), c), t_add(a, t_add(b, c)));
                assert_eq!(t_mul(t_mul(a, b), c), t_mul(a, t_mul(b, c)));
                // Distributivity is exact: both routes pick the same
                // maximum and add the same two floats.
                assert_eq!(
                    t_mul(a, t_add(b, c)),
                    t_add(t_mul(a, b), t_mul(a, c))
                );
            }
        }
    }
}

#[test]
fn three_determinant_routes_agree_on_finite_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for k in 2..=5usize {
        for _ in 0..200 {
            let rows = random_rows(&mut rng, k, false);
            let m = to_matrix(&rows);
            let solver = m.trop_det().unwrap();
            let enumeration = m.trop_det_by_enumeration().unwrap();
            let oracle = perm_det(&rows);
            assert_eq!(solver, enumeration);
            assert_eq!(solver.as_finite().unwrap(), oracle);
        }
    }
}

#[test]
fn determinants_with_bottom_entries_still_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut saw_bottom_det = false;
    for k in 2..=4usize {
        for _ in 0..200 {
            let rows = random_rows(&mut rng, k, true);
            let m = to_matrix(&rows);
            let solver = m.trop_det().unwrap();
            let enumeration = m.trop_det_by_enumeration().unwrap();
            let oracle = perm_det(&rows);
            assert_eq!(solver, enumeration);
            match solver.as_finite() {
                Some(v) => assert_eq!(v, oracle),
                None => {
                    assert_eq!(oracle, f64::NEG_INFINITY);
                    saw_bottom_det = true;
                }
            }
        }
    }
    assert!(saw_bottom_det, "the sample must include singular matrices");
}

#[test]
fn solver_diagonal_attains_the_reported_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..100 {
        let rows = random_rows(&mut rng, 5, false);
        let m = to_matrix(&rows);
        let (det, diagonal) = m
            .trop_det_with_diagonal()
            .unwrap()
            .expect("finite matrices have an attaining diagonal");
        let resummed: f64 = diagonal.iter().enumerate().map(|(i, &j)| rows[i][j]).sum();
        assert_eq!(det.as_finite().unwrap(), resummed);
    }
}

#[test]
fn constructed_dependence_split_validates_and_perturbation_breaks_it() {
    // g2 = max(g0, g1) makes {2} vs {0, 1} a dependence split with unit
    // coefficients.
    let g0 = |x: &[f64]| 2.0 * x[0] + 1.0;
    let g1 = |x: &[f64]| -x[0];
    let g2 = |x: &[f64]| (2.0 * x[0] + 1.0).max(-x[0]);
    let g: Vec<BoxedFn> = vec![Box::new(g0), Box::new(g1), Box::new(g2)];
    let samples: Vec<Vec<f64>> = (-20..=20).map(|k| vec![k as f64 / 4.0]).collect();
    let ones = vec![TropicalNumber::ONE; 3];
    let check = verify_gm_dependence(&g, &[0, 1], &[2], &ones, &samples, 1e-12).unwrap();
    assert!(check.holds());

    // Raising one coefficient on the singleton side breaks the identity.
    let coeffs = vec![TropicalNumber::ONE, TropicalNumber::ONE, fin(0.5)];
    let check = verify_gm_dependence(&g, &[0, 1], &[2], &coeffs, &samples, 1e-12).unwrap();
    assert!(!check.holds());
}

#[test]
fn row_regularity_and_assignments_track_bottom_patterns() {
    let finite = to_matrix(&[vec![0.0, 1.0], vec![2.0, 4.0]]);
    assert!(finite.is_regular().unwrap());
    assert!(finite.has_finite_assignment().unwrap());

    // A bottom row kills regularity and every assignment.
    let dead_row = to_matrix(&[
        vec![0.0, 1.0],
        vec![f64::NEG_INFINITY, f64::NEG_INFINITY],
    ]);
    assert!(!dead_row.is_regular().unwrap());
    assert!(!dead_row.has_finite_assignment().unwrap());
    assert!(dead_row.trop_det().unwrap().is_bottom());

    // A bottom column still leaves every row regular, yet no finite
    // diagonal exists.
    let dead_col = to_matrix(&[
        vec![0.0, f64::NEG_INFINITY],
        vec![2.0, f64::NEG_INFINITY],
    ]);
    assert!(dead_col.is_regular().unwrap());
    assert!(!dead_col.has_finite_assignment().unwrap());
    assert!(dead_col.trop_det().unwrap().is_bottom());
}
