//! Restrict a two-variable function to a ray, symbolically and by probing.
//!
//! `ray_slice` reads the breakpoints off the term structure; the
//! black-box localizer recovers the same kinks from point evaluations
//! alone. Negative jumps mark poles, positive jumps mark roots.
//!
//! ```bash
//! cargo run --example ray_slices
//! ```

use tropnev::{
    blackbox_slice, ray_slice, BlackboxConfig, Monomial, TropicalNumber, TropicalPolynomial,
    TropicalRational,
};

fn fin(v: f64) -> TropicalNumber {
    TropicalNumber::from_finite(v)
}

fn main() {
    // f(x, y) = max(x, -x) - max(y, -y), the plane example |x| - |y|.
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
    println!("f(x, y) = {f}");

    let dir = [0.6, 0.8];
    let slice = ray_slice(&f, &dir, 10.0, 1e-9);
    println!("\nsymbolic slice along {dir:?}, radius {}:", slice.radius);
    println!("  value at 0: {}", slice.value_at_0);
    println!("  slopes:     {:?}", slice.slopes);
    for bp in &slice.breakpoints {
        let kind = if bp.jump < 0.0 { "pole" } else { "root" };
        println!("  kink at t = {:>5}: jump {:>5}  ({kind})", bp.t, bp.jump);
    }

    let probed = blackbox_slice(
        |t| f.value(&[t * dir[0], t * dir[1]]),
        -10.0,
        10.0,
        &BlackboxConfig::default(),
    )
    .unwrap();
    println!("\nblack-box probe of the same ray:");
    for bp in &probed.breakpoints {
        println!("  kink at t = {:>8.5}: jump {:>8.5}", bp.t, bp.jump);
    }

    println!("\npoles on the slice: {}", slice.poles().count());
    println!("roots on the slice: {}", slice.roots().count());
}
