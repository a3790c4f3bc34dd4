//! Second-main-theorem report and the defect relation on a hand instance.
//!
//! Three lines against the map `[(x (+) 1) : (x (+) 0)]` give
//! `q = 3 > M + 1 = 2`, so the strict inequality has positive weight on
//! its left side. The slack column stays positive at every radius and
//! the defect sums sit far inside their bounds.
//!
//! ```bash
//! cargo run --example second_main_inequality
//! ```

use tropnev::{
    defect_relation_check, make_quadrature, smt_check, HomogeneousPolynomial, Monomial,
    ProjectiveMap, TropicalNumber, TropicalPolynomial,
};

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

fn main() {
    let f = ProjectiveMap::new(vec![
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
    .unwrap();
    let lines: Vec<HomogeneousPolynomial> = [-0.25, -0.5, -0.75]
        .iter()
        .map(|&v| {
            HomogeneousPolynomial::new(
                1,
                1,
                vec![(vec![1, 0], fin(0.0)), (vec![0, 1], fin(-v))],
            )
            .unwrap()
        })
        .collect();

    let quad = make_quadrature(1, 2, 0).unwrap();
    let grid: Vec<f64> = (1..=10).map(|k| 10.0 * k as f64).collect();
    let report = smt_check(&f, &lines, &[1.0], &grid, &quad).unwrap();
    println!("{}", report.to_csv());

    let min_slack = report
        .rows
        .iter()
        .map(|row| row.slack)
        .fold(f64::INFINITY, f64::min);
    println!("q = {}, basis size M + 1 = {}", report.q, report.basis_size);
    println!("degeneracy interval lambda = {:?}", report.lambda);
    println!("minimum slack over the grid: {min_slack}");

    let wide: Vec<f64> = (0..=24).map(|k| 10f64.powf(k as f64 / 8.0)).collect();
    let defects = defect_relation_check(&f, &lines, &wide, &quad).unwrap();
    println!("\n{}", defects.to_csv());
    println!("within total bound: {}", defects.within_total_bound);
    println!("within tail bound:  {}", defects.within_tail_bound);
}
