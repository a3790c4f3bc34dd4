//! Check the tropical Jensen identity `T(r, f) - T(r, 1/f) = f(0)`.
//!
//! Both characteristics are read off the same ray slices, the reciprocal
//! only flips signs, so the residual collapses to rounding noise in any
//! dimension and at every radius.
//!
//! ```bash
//! cargo run --example jensen_identity
//! ```

use tropnev::{corpus, jensen_residual, make_quadrature};

fn main() {
    let quad1 = make_quadrature(1, 2, 0).unwrap();
    let functions = corpus::standard_1d();
    println!("one variable, 5 corpus functions:");
    println!("{:>8} {:>14}", "r", "max |residual|");
    for &r in &[1.0, 10.0, 100.0, 1000.0] {
        let worst = functions
            .iter()
            .take(5)
            .map(|f| jensen_residual(f, r, &quad1).abs())
            .fold(0.0, f64::max);
        println!("{r:>8} {worst:>14.3e}");
    }

    let quad2 = make_quadrature(2, 512, 0).unwrap();
    let functions = corpus::standard_2d();
    println!("\ntwo variables, 5 corpus functions, 512 sphere nodes:");
    println!("{:>8} {:>14}", "r", "max |residual|");
    for &r in &[1.0, 10.0, 100.0] {
        let worst = functions
            .iter()
            .take(5)
            .map(|f| jensen_residual(f, r, &quad2).abs())
            .fold(0.0, f64::max);
        println!("{r:>8} {worst:>14.3e}");
    }
}
