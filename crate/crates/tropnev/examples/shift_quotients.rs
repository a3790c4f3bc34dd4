//! Logarithmic-derivative analogue: proximity of shift quotients.
//!
//! The proximity `m(r, f(x + c) (/) f(x))` stays far below the classical
//! upper bound `16|c|/(r + |c|) * T(alpha(r + |c|), f)/(alpha - 1)
//! + |f(0)|/2`, and its ratio against `T(r, f)` decays toward zero, the
//! shape the difference-operator calculus relies on.
//!
//! ```bash
//! cargo run --example shift_quotients
//! ```

use tropnev::{
    characteristic, corpus, log_diff_proximity, make_quadrature, q_diff_proximity,
    shift_proximity_bound,
};

fn main() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    let f = &corpus::with_poles_1d()[1];
    let c = [2.0];
    println!("f(x) = {f}");
    println!("shift c = {:?}, alpha = 2\n", c);

    println!(
        "{:>8} {:>12} {:>12} {:>10}",
        "r", "m(shift)", "bound", "m/T"
    );
    for k in 0..=6 {
        let r = 10f64.powf(k as f64 / 2.0);
        let m = log_diff_proximity(f, &c, r, &quad).unwrap();
        let bound = shift_proximity_bound(f, &c, 2.0, r, &quad);
        let t = characteristic(f, r, &quad);
        println!("{r:>8.1} {m:>12.5} {bound:>12.5} {:>10.2e}", m / t.max(1e-300));
    }

    let q = 2.0;
    println!("\nmultiplicative shift x -> {q} x:");
    println!("{:>8} {:>12}", "r", "m(q-shift)");
    for &r in &[1.0, 10.0, 100.0] {
        let m = q_diff_proximity(f, q, r, &quad).unwrap();
        println!("{r:>8} {m:>12.5}");
    }
}
