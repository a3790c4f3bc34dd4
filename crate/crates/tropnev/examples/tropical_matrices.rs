//! Tropical matrices: determinants, regularity, and dependence splits.
//!
//! The tropical determinant is a best-assignment value; the solver and
//! brute-force enumeration agree on every input. Gondran-Minoux
//! dependence replaces signs with a two-sided max identity checked on
//! sample sets.
//!
//! ```bash
//! cargo run --example tropical_matrices
//! ```

use tropnev::{verify_gm_dependence, TropicalMatrix, TropicalNumber};

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

fn main() {
    let m = TropicalMatrix::from_rows(&[
        vec![fin(1.0), fin(2.0)],
        vec![fin(3.0), fin(4.0)],
    ])
    .unwrap();
    println!("det via assignment solver: {}", m.trop_det().unwrap());
    println!(
        "det via enumeration:       {}",
        m.trop_det_by_enumeration().unwrap()
    );
    let (value, diagonal) = m.trop_det_with_diagonal().unwrap().unwrap();
    println!("optimal diagonal {diagonal:?} realizes {value}");

    let with_bottom = TropicalMatrix::from_rows(&[
        vec![fin(5.0), TropicalNumber::BOTTOM],
        vec![TropicalNumber::BOTTOM, TropicalNumber::BOTTOM],
    ])
    .unwrap();
    println!(
        "\nbottom row kills every assignment: det = {}, regular = {}",
        with_bottom.trop_det().unwrap(),
        with_bottom.is_regular().unwrap()
    );

    // g2 = max(g0, g1) is Gondran-Minoux dependent on {g0, g1} with unit
    // coefficients; nudging one coefficient breaks the identity.
    let g0 = |x: &[f64]| 2.0 * x[0] + 1.0;
    let g1 = |x: &[f64]| -x[0];
    let g2 = |x: &[f64]| (2.0 * x[0] + 1.0).max(-x[0]);
    let g: Vec<Box<dyn Fn(&[f64]) -> f64>> = vec![Box::new(g0), Box::new(g1), Box::new(g2)];
    let samples: Vec<Vec<f64>> = (-40..=40).map(|k| vec![k as f64 / 4.0]).collect();

    let ones = vec![TropicalNumber::ONE; 3];
    let ok = verify_gm_dependence(&g, &[0, 1], &[2], &ones, &samples, 1e-12).unwrap();
    println!("\nsplit {{g0, g1}} | {{g2}} with unit coefficients: holds = {}", ok.holds());

    let nudged = vec![fin(0.5), TropicalNumber::ONE, TropicalNumber::ONE];
    let broken = verify_gm_dependence(&g, &[0, 1], &[2], &nudged, &samples, 1e-12).unwrap();
    println!("same split with a0 = 0.5: {broken:?}");
}
