//! Pole-shift invariance: `T(r, 1/(f (+) a))` tracks `T(r, f)`.
//!
//! When the level `a` stays below every value `f` takes at its poles,
//! the roots of `f (+) a` reproduce the pole structure of `f` and the
//! gap sequence `T(r, 1/(f (+) a)) - T(r, f)` stays bounded in `r`.
//! Above that floor the premise fails and the scan says so.
//!
//! ```bash
//! cargo run --example pole_shift_invariance
//! ```

use tropnev::{corpus, fmt_gap, make_quadrature};

fn main() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    let f = &corpus::with_poles_1d()[0];
    println!("f(x) = {f}\n");

    let grid = [1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0];
    let probe = fmt_gap(f, 0.0, &grid, &quad).unwrap();
    let floor = probe.pole_floor.expect("this corpus member has poles");
    println!("pole value floor L_f = {floor}\n");

    for a in [floor - 2.0, floor - 1.0, floor + 1.0] {
        let scan = fmt_gap(f, a, &grid, &quad).unwrap();
        let lo = scan.gaps.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = scan.gaps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        println!(
            "a = {a:>6}: gaps in [{lo:>8.4}, {hi:>8.4}], above_floor = {}",
            scan.above_floor
        );
    }
}
