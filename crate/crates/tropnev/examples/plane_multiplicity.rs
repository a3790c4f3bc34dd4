//! Non-integer multiplicity of a two-variable pole.
//!
//! For `f(x, y) = |x| - |y|` the origin is a pole whose multiplicity is
//! the sphere average of the downward kink, `(4 sqrt(2) - 4)/pi`, an
//! irrational number. Tropical counting in several variables is real
//! valued, not integer valued.
//!
//! ```bash
//! cargo run --example plane_multiplicity
//! ```

use tropnev::{
    classify_point, counting_density, make_quadrature, Monomial, TropicalNumber,
    TropicalPolynomial, TropicalRational, DEFAULT_TOL,
};

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

fn main() {
    let num = TropicalPolynomial::new(
        2,
        vec![
            Monomial::new(fin(0.0), vec![1.0, 0.0]),
            Monomial::new(fin(0.0), vec![-1.0, 0.0]),
        ],
    )
    .unwrap();
    let den = TropicalPolynomial::new(
        2,
        vec![
            Monomial::new(fin(0.0), vec![0.0, 1.0]),
            Monomial::new(fin(0.0), vec![0.0, -1.0]),
        ],
    )
    .unwrap();
    let f = TropicalRational::new(num, den).unwrap();
    let exact = (4.0 * 2f64.sqrt() - 4.0) / std::f64::consts::PI;

    println!("f(x, y) = {f}");
    println!("exact origin multiplicity (4 sqrt(2) - 4)/pi = {exact:.12}\n");

    println!("{:>8} {:>16} {:>12}", "nodes", "estimate", "error");
    for k in [64, 512, 4096, 8192] {
        let quad = make_quadrature(2, k, 0).unwrap();
        let class = classify_point(&f, &[0.0, 0.0], &quad, DEFAULT_TOL).unwrap();
        println!(
            "{k:>8} {:>16.12} {:>12.2e}",
            class.multiplicity,
            (class.multiplicity - exact).abs()
        );
    }

    // The density of poles inside radius t is constant in t: the only
    // pole ray pattern is the origin kink seen from every radius.
    let quad = make_quadrature(2, 8192, 0).unwrap();
    println!("\ncounting density n(t):");
    for &t in &[0.1, 1.0, 10.0] {
        println!("  n({t:>4}) = {:.12}", counting_density(&f, t, &quad));
    }
}
