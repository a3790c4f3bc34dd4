//! Hypersurface first main theorem on the tropical projective line.
//!
//! For a projective map `F` and hypersurface polynomial `P`, the sum
//! `m_f(r, V_P) + N(r, 1 (/) P(f))` equals `d T_f(r)` up to a constant,
//! so the tabulated residual column barely moves while every other
//! column grows.
//!
//! ```bash
//! cargo run --example projective_first_main
//! ```

use tropnev::{
    compose, hyper_fmt_report, make_quadrature, weil_function, HomogeneousPolynomial, Monomial,
    ProjectiveMap, TropicalNumber, TropicalPolynomial,
};

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

fn main() {
    // F = [(x (+) 1) : (x (+) 0)] on the line.
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

    // P = x0 (+) (1/2) (*) x1, the line at level -1/2.
    let p = HomogeneousPolynomial::new(
        1,
        1,
        vec![
            (vec![1, 0], fin(0.0)),
            (vec![0, 1], fin(0.5)),
        ],
    )
    .unwrap();

    println!("map components: [{} : {}]", f.components()[0], f.components()[1]);
    println!("composition P(F) = {}", compose(&p, &f).unwrap());

    println!("\nWeil function samples (nonnegative by construction):");
    for x in [-2.0, 0.0, 0.25, 1.0, 3.0] {
        println!("  lambda({x:>5}) = {:.6}", weil_function(&p, &f, &[x]));
    }

    let quad = make_quadrature(1, 2, 0).unwrap();
    let grid = [1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0];
    let report = hyper_fmt_report(&p, &f, &grid, &quad).unwrap();
    println!("\n{}", report.to_csv());

    let spread = report
        .residual
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max)
        - report.residual.iter().cloned().fold(f64::INFINITY, f64::min);
    let coeff_spread = p.max_coeff() - p.min_coeff();
    println!("residual spread {spread:.2e} vs coefficient spread {coeff_spread}");
}
