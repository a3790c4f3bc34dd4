//! Build a tropical rational function, evaluate it, and classify points.
//!
//! The function `f = (x (+) 0) (/) (x (+) 1)` has a root kink at `x = 0`
//! (the numerator ties) and a pole kink at `x = 1` (the denominator
//! ties); everywhere else the function is locally affine.
//!
//! ```bash
//! cargo run --example evaluate_and_classify
//! ```

use tropnev::{
    classify_point, make_quadrature, Monomial, TropicalNumber, TropicalPolynomial,
    TropicalRational, DEFAULT_TOL,
};

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

fn main() {
    let num = TropicalPolynomial::new(
        1,
        vec![
            Monomial::new(fin(0.0), vec![1.0]),
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
    println!("f(x) = {f}");
    println!();

    println!("{:>6} {:>8}", "x", "f(x)");
    for x in [-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 4.0] {
        println!("{x:>6} {:>8}", f.value(&[x]));
    }
    println!();

    let quad = make_quadrature(1, 2, 0).unwrap();
    for x in [-1.0, 0.0, 0.5, 1.0] {
        let class = classify_point(&f, &[x], &quad, DEFAULT_TOL).unwrap();
        println!(
            "x = {x:>4}: {} (multiplicity {})",
            class.kind, class.multiplicity
        );
    }
}
