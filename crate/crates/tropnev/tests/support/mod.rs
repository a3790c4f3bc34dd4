#![allow(dead_code)]

//! Independent oracles and frozen constants shared by the integration
//! suites.
//!
//! Everything here recomputes expected values by a route the library does
//! not use: raw permutation sums instead of the assignment solver, midpoint
//! integration of the counting density instead of the closed-form counting
//! sum, and term-by-term evaluation loops instead of the normalized
//! polynomial pipeline. Constants for the plane example `|x| - |y|` are
//! closed forms derived by hand from the circle integrals.

use tropnev::{
    counting_density, HomogeneousPolynomial, Monomial, ProjectiveMap, SphereQuadrature,
    TropicalNumber, TropicalPolynomial, TropicalRational,
};

/// Pole multiplicity of `|x| - |y|` at the origin:
/// `(1/2pi) int_0^2pi 2 (|sin| - |cos|)_+ dphi = (4 sqrt2 - 4)/pi`.
pub const PLANE_POLE_DENSITY: f64 = 0.527_393_087_579_049_6;

/// Proximity slope of `|x| - |y|`:
/// `m(r) = r (1/2pi) int_0^2pi (|cos| - |sin|)_+ dphi = r (2 sqrt2 - 2)/pi`.
pub const PLANE_PROXIMITY_SLOPE: f64 = 0.263_696_543_789_524_8;

/// Maximum over permutations of the diagonal sums of a finite matrix,
/// by direct enumeration; independent of the assignment solver.
pub fn perm_det(rows: &[Vec<f64>]) -> f64 {
    fn rec(rows: &[Vec<f64>], used: &mut [bool], i: usize, acc: f64, best: &mut f64) {
        if i == rows.len() {
            *best = best.max(acc);
            return;
        }
        for j in 0..rows.len() {
            if !used[j] {
                used[j] = true;
                rec(rows, used, i + 1, acc + rows[i][j], best);
                used[j] = false;
            }
        }
    }
    let mut best = f64::NEG_INFINITY;
    let mut used = vec![false; rows.len()];
    rec(rows, &mut used, 0, 0.0, &mut best);
    best
}

/// `N(r, f)` by midpoint integration of the density,
/// `(1/2) int_0^r n(t, f) dt`; independent of the closed-form sum.
pub fn riemann_counting(
    f: &TropicalRational,
    r: f64,
    quad: &SphereQuadrature,
    steps: usize,
) -> f64 {
    let h = r / steps as f64;
    let mut acc = 0.0;
    for k in 0..steps {
        let t = (k as f64 + 0.5) * h;
        acc += counting_density(f, t, quad) * h;
    }
    0.5 * acc
}

/// Term-by-term evaluation of `max_i (c_i + <e_i, x>)` from raw pairs;
/// independent of the polynomial type.
pub fn naive_value(terms: &[(f64, Vec<f64>)], x: &[f64]) -> f64 {
    terms
        .iter()
        .map(|(c, e)| c + e.iter().zip(x).map(|(a, b)| a * b).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// The one-variable worked example `f0 = (x (+) 0) (/) (x (+) 1)`.
pub fn f0() -> TropicalRational {
    let num = TropicalPolynomial::new(
        1,
        vec![
            Monomial::new(TropicalNumber::from_finite(0.0), vec![1.0]),
            Monomial::new(TropicalNumber::from_finite(0.0), vec![0.0]),
        ],
    )
    .unwrap();
    let den = TropicalPolynomial::new(
        1,
        vec![
            Monomial::new(TropicalNumber::from_finite(0.0), vec![1.0]),
            Monomial::new(TropicalNumber::from_finite(1.0), vec![0.0]),
        ],
    )
    .unwrap();
    TropicalRational::new(num, den).unwrap()
}

/// `T(r, f0)` by hand: the only pole sits at `t = 1` with unit jump and
/// the proximity vanishes, so `T = (r - 1)/2` past the pole.
pub fn f0_characteristic(r: f64) -> f64 {
    ((r - 1.0) / 2.0).max(0.0)
}

/// `N(r, 1 (/) (f0 (+) a))` by hand for `-1 < a < 0`: the graph of
/// `f0 (+) a` leaves the plateau `a` at `t = 1 + a` with unit jump.
pub fn f0_shifted_root_counting(r: f64, a: f64) -> f64 {
    assert!((-1.0..0.0).contains(&a));
    ((r - (1.0 + a)) / 2.0).max(0.0)
}

/// Dyadic test coordinates in `[-bound, bound]`: a fixed odd-length comb
/// that always contains 0 and both signs.
pub fn dyadic_grid(bound: f64, count: usize) -> Vec<f64> {
    assert!(count >= 3 && count % 2 == 1);
    let half = (count / 2) as i64;
    (-half..=half)
        .map(|k| bound * k as f64 / half as f64)
        .collect()
}

/// The plane example `|x| - |y| = (x (+) 1/x) (/) (y (+) 1/y)`: a single
/// corner at the origin whose pole multiplicity is [`PLANE_POLE_DENSITY`].
pub fn plane_example() -> TropicalRational {
    let zero = TropicalNumber::from_finite(0.0);
    let num = TropicalPolynomial::new(
        2,
        vec![
            Monomial::new(zero, vec![1.0, 0.0]),
            Monomial::new(zero, vec![-1.0, 0.0]),
        ],
    )
    .unwrap();
    let den = TropicalPolynomial::new(
        2,
        vec![
            Monomial::new(zero, vec![0.0, 1.0]),
            Monomial::new(zero, vec![0.0, -1.0]),
        ],
    )
    .unwrap();
    TropicalRational::new(num, den).unwrap()
}

/// The three-hypersurface report instance: the map
/// `[x (+) 1 : x (+) 0]` against the lines `x0 (+) (-v) (*) x1` for
/// `v in {-0.25, -0.5, -0.75}`. Hand values: `T = (r-1)/2`,
/// `N_j = (r - 1 - v_j)/2`, tail sum `(r - 0.25)/2`, slack `0.375`.
pub fn corollary_instance() -> (ProjectiveMap, Vec<HomogeneousPolynomial>) {
    let poly = |terms: &[(f64, f64)]| {
        TropicalPolynomial::new(
            1,
            terms
                .iter()
                .map(|&(c, e)| Monomial::new(TropicalNumber::from_finite(c), vec![e]))
                .collect(),
        )
        .unwrap()
    };
    let f = ProjectiveMap::new(vec![
        poly(&[(1.0, 0.0), (0.0, 1.0)]),
        poly(&[(0.0, 0.0), (0.0, 1.0)]),
    ])
    .unwrap();
    let ps = [-0.25f64, -0.5, -0.75]
        .iter()
        .map(|&v| {
            HomogeneousPolynomial::new(
                1,
                1,
                [
                    (vec![1, 0], TropicalNumber::from_finite(0.0)),
                    (vec![0, 1], TropicalNumber::from_finite(-v)),
                ],
            )
            .unwrap()
        })
        .collect();
    (f, ps)
}
