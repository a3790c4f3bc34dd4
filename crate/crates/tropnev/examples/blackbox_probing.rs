//! Recover kinks of an opaque piecewise-linear function by probing.
//!
//! The localizer only sees point values. It refines suspicious cells
//! until each kink is isolated, merges kinks closer than its resolution,
//! and gives up with a budget error instead of spinning when the
//! evaluation allowance runs out.
//!
//! ```bash
//! cargo run --example blackbox_probing
//! ```

use tropnev::{blackbox_slice, BlackboxConfig};

fn main() {
    // An opaque function with kinks at -3, 0.5, and 2 (jump sizes 2, 1, 3).
    let f = |t: f64| 2.0 * (t + 3.0).max(0.0) + (t - 0.5).max(0.0) + 3.0 * (t - 2.0).max(0.0);

    let cfg = BlackboxConfig::default();
    let slice = blackbox_slice(f, -10.0, 10.0, &cfg).unwrap();
    println!("recovered breakpoints:");
    for bp in &slice.breakpoints {
        println!("  t = {:>8.5}, jump = {:>8.5}", bp.t, bp.jump);
    }

    // Two kinks one nanometer apart merge into one reported kink whose
    // jump is the sum.
    let close = |t: f64| (t - 1.0).max(0.0) + (t - 1.0 - 1e-9).max(0.0);
    let merged = blackbox_slice(close, -4.0, 4.0, &cfg).unwrap();
    println!("\nnear-coincident kinks merge:");
    for bp in &merged.breakpoints {
        println!("  t = {:>8.5}, jump = {:>8.5}", bp.t, bp.jump);
    }

    let starved = BlackboxConfig {
        max_evals: 40,
        ..BlackboxConfig::default()
    };
    match blackbox_slice(f, -10.0, 10.0, &starved) {
        Ok(_) => println!("\nunexpected success on a starved budget"),
        Err(e) => println!("\nstarved budget fails loudly: {e}"),
    }
}
