//! Tabulate the value-distribution functionals and estimate growth order.
//!
//! For a tropical rational function the characteristic `T = m + N` is
//! convex, increasing, and piecewise linear in the radius, so the
//! growth-order estimate over a wide grid comes out near 1.
//!
//! ```bash
//! cargo run --example characteristic_table
//! ```

use tropnev::{
    char_table, growth_estimate, make_quadrature, Monomial, TropicalNumber, TropicalPolynomial,
    TropicalRational,
};

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

fn main() {
    // f = (2 (*) x^2 (+) 0) (/) (x (+) 1): one root pair, one pole kink.
    let num = TropicalPolynomial::new(
        1,
        vec![
            Monomial::new(fin(2.0), vec![2.0]),
            Monomial::new(fin(0.0), vec![0.0]),
        ],
    )
    .unwrap();
    let den = TropicalPolynomial::new(
        1,
        vec![
            Monomial::new(fin(0.0), vec![1.0]),
            Monomial::new(fin(1.0), vec![0.0]),
        ],
    )
    .unwrap();
    let f = TropicalRational::new(num, den).unwrap();
    println!("f(x) = {f}\n");

    let quad = make_quadrature(1, 2, 0).unwrap();
    let grid = [1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0];
    let table = char_table(&f, &grid, &quad).unwrap();
    print!("{}", table.to_csv());

    let wide: Vec<f64> = (0..=32).map(|k| 10f64.powf(k as f64 / 8.0)).collect();
    let est = growth_estimate(&f, &wide, &quad).unwrap();
    println!("\ngrowth order estimate: rho = {:.4}", est.rho);
    println!("hyper-order estimate:  rho2 = {:.4}", est.rho2);
    println!("subnormal growth:      {}", est.subnormal);
}
