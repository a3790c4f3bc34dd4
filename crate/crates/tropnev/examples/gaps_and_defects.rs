//! Complete-polynomial gaps and grid defect estimates.
//!
//! A complete hypersurface polynomial pins its composition between
//! `min a + d ||f||` and `max a + d ||f||`, so the gap sequence
//! `T_f - N/d` oscillates within `[min a, max a]/d`. Dividing the
//! bounded proximity by the growing characteristic then drives every
//! defect estimate toward zero.
//!
//! ```bash
//! cargo run --example gaps_and_defects
//! ```

use tropnev::{
    complete_poly_gap, defect, make_quadrature, HomogeneousPolynomial, Monomial, ProjectiveMap,
    TropicalNumber, TropicalPolynomial,
};

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

fn line_map() -> ProjectiveMap {
    ProjectiveMap::new(vec![
        TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(fin(0.0), vec![1.0]),
                Monomial::new(fin(1.0), vec![0.0]),
            ],
        )
        .unwrap(),
        TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(fin(0.0), vec![1.0]),
                Monomial::new(fin(0.0), vec![0.0]),
            ],
        )
        .unwrap(),
    ])
    .unwrap()
}

fn main() {
    let f = line_map();
    let quad = make_quadrature(1, 2, 0).unwrap();

    // Complete quadratic with coefficient spread 0.75.
    let p = HomogeneousPolynomial::new(
        1,
        2,
        vec![
            (vec![2, 0], fin(0.25)),
            (vec![1, 1], fin(0.0)),
            (vec![0, 2], fin(-0.5)),
        ],
    )
    .unwrap();
    let grid = [1.0, 2.0, 4.0, 8.0, 16.0, 32.0];
    let gaps = complete_poly_gap(&p, &f, &grid, &quad).unwrap();
    println!("gap sequence T_f - N/d over r = {grid:?}:");
    for (r, g) in grid.iter().zip(&gaps) {
        println!("  r = {r:>4}: {g:>10.6}");
    }
    let envelope = (p.max_coeff() - p.min_coeff()) / p.degree() as f64;
    println!("allowed oscillation: {envelope}\n");

    // Defects of three lines at levels below the pole floor of the map.
    let wide: Vec<f64> = (0..=32).map(|k| 10f64.powf(k as f64 / 8.0)).collect();
    for v in [-0.25, -0.5, -0.75] {
        let line = HomogeneousPolynomial::new(
            1,
            1,
            vec![(vec![1, 0], fin(0.0)), (vec![0, 1], fin(-v))],
        )
        .unwrap();
        let delta = defect(&line, &f, &wide, &quad).unwrap();
        println!("defect estimate at level {v:>5}: {delta:.2e}");
    }
}
