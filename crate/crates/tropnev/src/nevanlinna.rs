//! The value-distribution functionals `m`, `n`, `N`, `T` and their
//! identities.
//!
//! For a tropical rational `f` on `R^n`:
//!
//! * `m(r, f)` is the sphere average of the positive part `f+(r theta)`,
//! * `n(t, f)` sums `|J|` over the pole breakpoints of each ray slice with
//!   `|t'| < t` and averages over directions,
//! * `N(r, f)` is the half-integral of `n` in `t`, computed per direction by
//!   the exact closed form `(1/2) sum |J| (r - |t'|)` (never by numeric
//!   integration; the trapezoid route exists only as a test oracle),
//! * `T(r, f) = m(r, f) + N(r, f)`.
//!
//! Every functional slices each antipodal node pair once and reads all
//! radii off that slice, which keeps radius grids cheap and makes the
//! one-variable Jensen identity `T(r,f) - T(r, 1/f) = f(0)` hold per pair
//! up to floating-point rounding in every dimension. Reductions accumulate
//! in node-index order, so results are bit-reproducible for a fixed
//! quadrature.

use serde::{Deserialize, Serialize};

use crate::poly::{PlfunError, TropicalRational};
use crate::quad::{NevanlinnaError, QuadScheme, SphereQuadrature};
use crate::slice::{ray_slice, RaySlice};
use crate::DEFAULT_TOL;

/// Summary of the quadrature a table or report was computed with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadMeta {
    pub dim: usize,
    pub scheme: QuadScheme,
    pub size: usize,
    pub seed: u64,
}

impl From<&SphereQuadrature> for QuadMeta {
    fn from(q: &SphereQuadrature) -> Self {
        QuadMeta {
            dim: q.dim(),
            scheme: q.scheme(),
            size: q.len(),
            seed: q.seed(),
        }
    }
}

/// One ray slice per antipodal pair, with the combined pair weight.
///
/// The slice along `theta` covers both rays of the pair (`t > 0` and
/// `t < 0`), and the slice of the reciprocal function is the same slice
/// with negated values and jumps, so every functional of `f` and `1/f`
/// reads off one slicing pass.
pub(crate) struct SliceSet {
    pairs: Vec<(f64, RaySlice)>,
}

impl SliceSet {
    pub(crate) fn new(f: &TropicalRational, quad: &SphereQuadrature, radius: f64) -> SliceSet {
        let pairs = (0..quad.pair_count())
            .map(|i| {
                let (node, w) = quad.pair(i);
                (w, ray_slice(f, node, radius, DEFAULT_TOL))
            })
            .collect();
        SliceSet { pairs }
    }

    /// `m(r, f)` (or `m(r, 1/f)` when `invert`): the average of the
    /// positive part at radius `r`.
    pub(crate) fn proximity(&self, r: f64, invert: bool) -> f64 {
        let sign = if invert { -1.0 } else { 1.0 };
        let mut acc = 0.0;
        for (w, slice) in &self.pairs {
            let plus = (sign * slice.value_at(r)).max(0.0);
            let minus = (sign * slice.value_at(-r)).max(0.0);
            acc += w * 0.5 * (plus + minus);
        }
        acc
    }

    /// Raw sphere average of the value at radius `r` (no positive part).
    pub(crate) fn mean(&self, r: f64) -> f64 {
        let mut acc = 0.0;
        for (w, slice) in &self.pairs {
            acc += w * 0.5 * (slice.value_at(r) + slice.value_at(-r));
        }
        acc
    }

    /// `n(t, f)` (poles) or `n(t, 1/f)` (roots) with the strict ball
    /// `|t'| < t`.
    pub(crate) fn density(&self, t: f64, invert: bool) -> f64 {
        let mut acc = 0.0;
        for (w, slice) in &self.pairs {
            let mut s = 0.0;
            for bp in &slice.breakpoints {
                let j = if invert { -bp.jump } else { bp.jump };
                if j < 0.0 && bp.t.abs() < t {
                    s += -j;
                }
            }
            acc += w * s;
        }
        acc
    }

    /// `N(r, f)` by the per-direction closed form
    /// `(1/2) sum_{|t'|<r, J<0} |J| (r - |t'|)`; an origin breakpoint
    /// contributes `|J| r`.
    pub(crate) fn counting(&self, r: f64, invert: bool) -> f64 {
        let mut acc = 0.0;
        for (w, slice) in &self.pairs {
            let mut s = 0.0;
            for bp in &slice.breakpoints {
                let j = if invert { -bp.jump } else { bp.jump };
                if j < 0.0 && bp.t.abs() < r {
                    s += -j * (r - bp.t.abs());
                }
            }
            acc += w * 0.5 * s;
        }
        acc
    }

    pub(crate) fn characteristic(&self, r: f64, invert: bool) -> f64 {
        self.proximity(r, invert) + self.counting(r, invert)
    }

    /// Smallest slice value at a pole breakpoint, scanning all pairs;
    /// `None` when no slice has a pole. Estimates the pole value floor
    /// `L_f` within the scanned radius.
    pub(crate) fn pole_floor(&self) -> Option<f64> {
        let mut floor: Option<f64> = None;
        for (_, slice) in &self.pairs {
            for bp in slice.poles() {
                let v = slice.value_at(bp.t);
                floor = Some(floor.map_or(v, |f| f.min(v)));
            }
        }
        floor
    }
}

fn validate_grid(r_grid: &[f64]) -> Result<(), NevanlinnaError> {
    if r_grid.is_empty() {
        return Err(NevanlinnaError::DegenerateGrid("empty grid".into()));
    }
    if r_grid[0] <= 0.0 || !r_grid[0].is_finite() {
        return Err(NevanlinnaError::DegenerateGrid(
            "radii must be positive and finite".into(),
        ));
    }
    for w in r_grid.windows(2) {
        if w[1] <= w[0] || !w[1].is_finite() {
            return Err(NevanlinnaError::DegenerateGrid(
                "radii must be strictly increasing and finite".into(),
            ));
        }
    }
    Ok(())
}

/// Proximity function `m(r, f)`: the quadrature average of
/// `max(f(r theta), 0)`. In dimension 1 this is exactly
/// `(f+(r) + f+(-r)) / 2`.
///
/// # Panics
///
/// Panics when `r <= 0` or the quadrature dimension does not match `f`.
pub fn proximity(f: &TropicalRational, r: f64, quad: &SphereQuadrature) -> f64 {
    assert!(r > 0.0 && r.is_finite(), "radius must be positive");
    assert_eq!(quad.dim(), f.dim(), "quadrature dimension mismatch");
    let mut scaled = vec![0.0; f.dim()];
    quad.average(|node| {
        for (s, x) in scaled.iter_mut().zip(node) {
            *s = r * x;
        }
        f.value_unchecked(&scaled).max(0.0)
    })
}

/// Pole-counting density `n(t, f)`: per direction, the sum of `|J|` over
/// pole breakpoints strictly inside radius `t`, averaged over the sphere.
///
/// # Panics
///
/// Panics when `t <= 0` or the quadrature dimension does not match `f`.
pub fn counting_density(f: &TropicalRational, t: f64, quad: &SphereQuadrature) -> f64 {
    assert!(t > 0.0 && t.is_finite(), "radius must be positive");
    assert_eq!(quad.dim(), f.dim(), "quadrature dimension mismatch");
    SliceSet::new(f, quad, t).density(t, false)
}

/// Integrated counting function `N(r, f)`, by the exact per-direction
/// closed form (no numeric `t`-integration).
///
/// # Panics
///
/// Panics when `r <= 0` or the quadrature dimension does not match `f`.
pub fn counting(f: &TropicalRational, r: f64, quad: &SphereQuadrature) -> f64 {
    assert!(r > 0.0 && r.is_finite(), "radius must be positive");
    assert_eq!(quad.dim(), f.dim(), "quadrature dimension mismatch");
    SliceSet::new(f, quad, r).counting(r, false)
}

/// Characteristic function `T(r, f) = m(r, f) + N(r, f)`.
///
/// # Panics
///
/// Panics when `r <= 0` or the quadrature dimension does not match `f`.
pub fn characteristic(f: &TropicalRational, r: f64, quad: &SphereQuadrature) -> f64 {
    proximity(f, r, quad) + counting(f, r, quad)
}

/// The four functionals tabulated over a radius grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharTable {
    pub r_grid: Vec<f64>,
    /// `m(r, f)` per grid radius.
    pub proximity: Vec<f64>,
    /// `n(r, f)` per grid radius.
    pub density: Vec<f64>,
    /// `N(r, f)` per grid radius.
    pub counting: Vec<f64>,
    /// `T(r, f) = m + N` per grid radius.
    pub characteristic: Vec<f64>,
    pub quad: QuadMeta,
}

impl CharTable {
    /// CSV rendering with header `r,m,n,N,T`; the quadrature descriptor
    /// rides along as leading `#` comment lines.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# dim: {}\n", self.quad.dim));
        out.push_str(&format!("# scheme: {}\n", self.quad.scheme));
        out.push_str(&format!("# nodes: {}\n", self.quad.size));
        out.push_str(&format!("# seed: {}\n", self.quad.seed));
        out.push_str("r,m,n,N,T\n");
        for i in 0..self.r_grid.len() {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                self.r_grid[i],
                self.proximity[i],
                self.density[i],
                self.counting[i],
                self.characteristic[i]
            ));
        }
        out
    }

    /// Pretty JSON rendering with the same columns and metadata.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::json!({
            "quad": self.quad,
            "r": self.r_grid,
            "m": self.proximity,
            "n": self.density,
            "N": self.counting,
            "T": self.characteristic,
        }))
        .expect("table serializes")
    }
}

/// Tabulates `m`, `n`, `N`, `T` over an increasing positive radius grid,
/// slicing each node pair once at the largest radius.
pub fn char_table(
    f: &TropicalRational,
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<CharTable, NevanlinnaError> {
    assert_eq!(quad.dim(), f.dim(), "quadrature dimension mismatch");
    validate_grid(r_grid)?;
    let r_max = *r_grid.last().expect("grid is nonempty");
    let slices = SliceSet::new(f, quad, r_max);
    let mut table = CharTable {
        r_grid: r_grid.to_vec(),
        proximity: Vec::with_capacity(r_grid.len()),
        density: Vec::with_capacity(r_grid.len()),
        counting: Vec::with_capacity(r_grid.len()),
        characteristic: Vec::with_capacity(r_grid.len()),
        quad: QuadMeta::from(quad),
    };
    for &r in r_grid {
        let m = slices.proximity(r, false);
        let n = slices.density(r, false);
        let big_n = slices.counting(r, false);
        table.proximity.push(m);
        table.density.push(n);
        table.counting.push(big_n);
        table.characteristic.push(m + big_n);
    }
    Ok(table)
}

/// Jensen residual `T(r, f) - T(r, 1/f) - f(0)`.
///
/// Both characteristics are read off the same slices (the reciprocal
/// negates values and jumps), so the residual vanishes to floating-point
/// rounding in every dimension; the identity is exact per ray.
///
/// # Panics
///
/// Panics when `r <= 0` or the quadrature dimension does not match `f`.
pub fn jensen_residual(f: &TropicalRational, r: f64, quad: &SphereQuadrature) -> f64 {
    assert!(r > 0.0 && r.is_finite(), "radius must be positive");
    assert_eq!(quad.dim(), f.dim(), "quadrature dimension mismatch");
    let slices = SliceSet::new(f, quad, r);
    let origin = vec![0.0; f.dim()];
    slices.characteristic(r, false) - slices.characteristic(r, true) - f.value(&origin)
}

/// Result of a pole-shift invariance scan; see [`fmt_gap`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FmtGap {
    /// `T(r, 1/(f (+) a)) - T(r, f)` per grid radius; bounded in `r` when
    /// `a` sits below the pole value floor.
    pub gaps: Vec<f64>,
    /// Smallest observed value of `f` at a pole within the scanned radius;
    /// `None` when the slices show no poles (entire-like behavior).
    pub pole_floor: Option<f64>,
    /// Set when `a >= pole_floor`: the premise of the invariance statement
    /// fails and the gap sequence need not stay bounded.
    pub above_floor: bool,
}

/// Gap sequence `T(r, 1/(f (+) a)) - T(r, f)` over a radius grid.
///
/// When `a` stays below every pole value of `f` (the pole value floor
/// `L_f`), the root-counting of `f (+) a` reproduces the pole structure
/// exactly and the sequence is bounded; `above_floor` warns when the
/// premise fails. The floor is estimated from the slices at the largest
/// grid radius.
pub fn fmt_gap(
    f: &TropicalRational,
    a: f64,
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<FmtGap, NevanlinnaError> {
    assert!(a.is_finite(), "shift level must be finite");
    assert_eq!(quad.dim(), f.dim(), "quadrature dimension mismatch");
    validate_grid(r_grid)?;
    let r_max = *r_grid.last().expect("grid is nonempty");
    let f_slices = SliceSet::new(f, quad, r_max);
    let pole_floor = f_slices.pole_floor();
    let above_floor = pole_floor.is_some_and(|l| a >= l);

    let shifted = f.plus_const(crate::semiring::TropicalNumber::from_finite(a));
    let s_slices = SliceSet::new(&shifted, quad, r_max);
    let gaps = r_grid
        .iter()
        .map(|&r| s_slices.characteristic(r, true) - f_slices.characteristic(r, false))
        .collect();
    Ok(FmtGap {
        gaps,
        pole_floor,
        above_floor,
    })
}

/// Proximity of the additive shift quotient,
/// `m(r, f(x + c) (/) f(x))`.
///
/// The quotient is assembled exactly: numerator `num(f(.+c)) (*) den(f)`,
/// denominator `den(f(.+c)) (*) num(f)`.
pub fn log_diff_proximity(
    f: &TropicalRational,
    c: &[f64],
    r: f64,
    quad: &SphereQuadrature,
) -> Result<f64, PlfunError> {
    assert!(
        c.iter().any(|&v| v != 0.0),
        "shift vector must be nonzero"
    );
    let quotient = f.shift(c)?.t_div(f)?;
    Ok(proximity(&quotient, r, quad))
}

/// Proximity of the multiplicative shift quotient,
/// `m(r, f(q x) (/) f(x))`.
pub fn q_diff_proximity(
    f: &TropicalRational,
    q: f64,
    r: f64,
    quad: &SphereQuadrature,
) -> Result<f64, PlfunError> {
    let quotient = f.q_scale(q)?.t_div(f)?;
    Ok(proximity(&quotient, r, quad))
}

/// Classical upper bound for the shift-quotient proximity,
/// `16 |c| / (r + |c|) * 1/(alpha - 1) * T(alpha (r + |c|), f) + |f(0)| / 2`,
/// valid for every `alpha > 1` and `r > 0` in dimension 1.
///
/// # Panics
///
/// Panics when `alpha <= 1` or `r <= 0`.
pub fn shift_proximity_bound(
    f: &TropicalRational,
    c: &[f64],
    alpha: f64,
    r: f64,
    quad: &SphereQuadrature,
) -> f64 {
    assert!(alpha > 1.0, "the bound requires alpha > 1");
    assert!(r > 0.0, "radius must be positive");
    let c_norm = c.iter().map(|v| v * v).sum::<f64>().sqrt();
    let origin = vec![0.0; f.dim()];
    16.0 * c_norm / (r + c_norm) / (alpha - 1.0)
        * characteristic(f, alpha * (r + c_norm), quad)
        + f.value(&origin).abs() / 2.0
}

/// Growth-order estimates from a tabulated characteristic; see
/// [`growth_estimate`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthEstimate {
    /// Least-squares slope of `log T` against `log r` over the top decade;
    /// estimates the growth order.
    pub rho: f64,
    /// Least-squares slope of `log log T` against `log r` over the top
    /// decade; estimates the hyper-order.
    pub rho2: f64,
    /// Whether `log T(r_max) / r_max < 0.01` (growth well below
    /// exponential).
    pub subnormal: bool,
}

fn ls_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some(sxy / sxx)
}

/// Estimates the growth order and hyper-order of `T(r, f)` over a radius
/// grid spanning at least three decades. The estimates are least-squares
/// slopes over the top decade and are not certified limits; sequences that
/// oscillate between decades can fool them.
pub fn growth_estimate(
    f: &TropicalRational,
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<GrowthEstimate, NevanlinnaError> {
    validate_grid(r_grid)?;
    let (r_min, r_max) = (r_grid[0], *r_grid.last().expect("nonempty"));
    if r_max / r_min < 999.999 {
        return Err(NevanlinnaError::DegenerateGrid(
            "growth estimation needs a grid spanning at least three decades".into(),
        ));
    }
    let table = char_table(f, r_grid, quad)?;
    let top: Vec<(f64, f64)> = r_grid
        .iter()
        .zip(&table.characteristic)
        .filter(|(&r, _)| r >= r_max / 10.0)
        .map(|(&r, &t)| (r, t))
        .collect();
    if top.len() < 2 {
        return Err(NevanlinnaError::DegenerateGrid(
            "fewer than two grid points in the top decade".into(),
        ));
    }

    let log_pts: Vec<(f64, f64)> = top
        .iter()
        .filter(|(_, t)| *t > 0.0)
        .map(|&(r, t)| (r.ln(), t.ln()))
        .collect();
    let rho = ls_slope(&log_pts).unwrap_or(0.0);
    let loglog_pts: Vec<(f64, f64)> = top
        .iter()
        .filter(|(_, t)| *t > 1.0)
        .map(|&(r, t)| (r.ln(), t.ln().ln()))
        .collect();
    let rho2 = ls_slope(&loglog_pts).unwrap_or(0.0);
    let t_max = *table.characteristic.last().expect("nonempty");
    let subnormal = t_max <= 1.0 || t_max.ln() / r_max < 0.01;
    Ok(GrowthEstimate { rho, rho2, subnormal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Monomial, TropicalPolynomial};
    use crate::quad::make_quadrature;
    use crate::semiring::TropicalNumber;

    fn t(v: f64) -> TropicalNumber {
        TropicalNumber::from_finite(v)
    }

    fn two_term_quotient() -> TropicalRational {
        let num = TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(t(0.0), vec![1.0]),
                Monomial::new(t(0.0), vec![0.0]),
            ],
        )
        .unwrap();
        let den = TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(t(0.0), vec![1.0]),
                Monomial::new(t(1.0), vec![0.0]),
            ],
        )
        .unwrap();
        TropicalRational::new(num, den).unwrap()
    }

    fn abs_x_minus_abs_y() -> TropicalRational {
        let num = TropicalPolynomial::new(
            2,
            vec![
                Monomial::new(t(0.0), vec![1.0, 0.0]),
                Monomial::new(t(0.0), vec![-1.0, 0.0]),
            ],
        )
        .unwrap();
        let den = TropicalPolynomial::new(
            2,
            vec![
                Monomial::new(t(0.0), vec![0.0, 1.0]),
                Monomial::new(t(0.0), vec![0.0, -1.0]),
            ],
        )
        .unwrap();
        TropicalRational::new(num, den).unwrap()
    }

    #[test]
    fn one_dimensional_functionals_match_hand_values() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let x = TropicalRational::entire(TropicalPolynomial::affine(1, 0.0, vec![1.0]).unwrap());
        assert_eq!(proximity(&x, 4.0, &quad), 2.0);
        assert_eq!(characteristic(&x, 4.0, &quad), 2.0);

        let c = TropicalRational::constant(1, 3.0);
        assert_eq!(proximity(&c, 7.0, &quad), 3.0);

        let f = two_term_quotient();
        assert_eq!(counting_density(&f, 2.0, &quad), 1.0);
        assert_eq!(counting(&f, 3.0, &quad), 1.0);
        assert_eq!(proximity(&f, 3.0, &quad), 0.0);
        assert_eq!(characteristic(&f, 3.0, &quad), 1.0);
    }

    #[test]
    fn plane_example_matches_the_closed_form_angular_integrals() {
        let quad = make_quadrature(2, crate::quad::DEFAULT_ANGULAR_NODES, 0).unwrap();
        let f = abs_x_minus_abs_y();
        let pi = std::f64::consts::PI;
        let m_expected = (2.0 * 2.0f64.sqrt() - 2.0) / pi;
        assert!((proximity(&f, 1.0, &quad) - m_expected).abs() < 1e-6);
        let n_expected = (4.0 * 2.0f64.sqrt() - 4.0) / pi;
        for tt in [0.5, 1.0, 2.0] {
            assert!((counting_density(&f, tt, &quad) - n_expected).abs() < 1e-6);
        }
        // N(2) = (1/2) * n * 2 with the pole at the origin.
        assert!((counting(&f, 2.0, &quad) - n_expected).abs() < 1e-6);
        // m = N at r = 1 for this function.
        let t1 = characteristic(&f, 1.0, &quad);
        assert!((t1 - 2.0 * m_expected).abs() < 1e-6);
    }

    #[test]
    fn char_table_satisfies_its_invariants() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let f = two_term_quotient();
        let grid: Vec<f64> = (1..=30).map(|i| i as f64 * 0.25).collect();
        let table = char_table(&f, &grid, &quad).unwrap();
        for i in 0..grid.len() {
            assert_eq!(
                table.characteristic[i],
                table.proximity[i] + table.counting[i]
            );
        }
        for w in table.counting.windows(2) {
            assert!(w[1] >= w[0], "N must be nondecreasing");
        }
        // No pole inside r < 1: N vanishes there.
        assert_eq!(table.counting[0], 0.0);
        assert_eq!(table.counting[2], 0.0);
    }

    #[test]
    fn grid_validation_rejects_bad_grids() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let f = two_term_quotient();
        for bad in [vec![], vec![-1.0, 2.0], vec![1.0, 1.0], vec![2.0, 1.0]] {
            assert!(matches!(
                char_table(&f, &bad, &quad),
                Err(NevanlinnaError::DegenerateGrid(_))
            ));
        }
    }

    #[test]
    fn jensen_residual_vanishes_in_dimension_one() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let f = two_term_quotient();
        for r in [0.5, 1.0, 2.0, 10.0, 100.0] {
            assert!(jensen_residual(&f, r, &quad).abs() < 1e-12);
        }
        let c = TropicalRational::constant(1, -4.0);
        assert!(jensen_residual(&c, 5.0, &quad).abs() < 1e-12);
    }

    #[test]
    fn jensen_residual_is_tiny_in_the_plane() {
        let quad = make_quadrature(2, 128, 0).unwrap();
        let f = abs_x_minus_abs_y();
        for r in [1.0, 7.5] {
            let res = jensen_residual(&f, r, &quad);
            assert!(res.abs() < 1e-12, "residual {res}");
        }
    }

    #[test]
    fn fmt_gap_is_bounded_below_the_floor_and_warns_above() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let f = two_term_quotient();
        let grid: Vec<f64> = (1..=100).map(|i| i as f64).collect();
        // L_f = f(1) = 0.
        let low = fmt_gap(&f, -2.0, &grid, &quad).unwrap();
        assert_eq!(low.pole_floor, Some(0.0));
        assert!(!low.above_floor);
        let spread = low
            .gaps
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &g| {
                (lo.min(g), hi.max(g))
            });
        assert!(spread.1 - spread.0 < 2.0 * 2.0 + 2.0);

        let high = fmt_gap(&f, 1.0, &grid, &quad).unwrap();
        assert!(high.above_floor);

        let entire = TropicalRational::entire(
            TropicalPolynomial::affine(1, 0.0, vec![1.0]).unwrap(),
        );
        let e = fmt_gap(&entire, 0.0, &grid, &quad).unwrap();
        assert_eq!(e.pole_floor, None);
        assert!(!e.above_floor);
        let espread = e
            .gaps
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &g| {
                (lo.min(g), hi.max(g))
            });
        assert!(espread.1 - espread.0 < 1.0);
    }

    #[test]
    fn shift_quotient_of_a_line_is_constant() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let x = TropicalRational::entire(TropicalPolynomial::affine(1, 0.0, vec![1.0]).unwrap());
        for r in [1.0, 10.0, 1e4] {
            assert_eq!(log_diff_proximity(&x, &[1.0], r, &quad).unwrap(), 1.0);
        }
    }

    #[test]
    fn shift_quotient_obeys_the_classical_bound_on_the_running_example() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let f = two_term_quotient();
        for r in [1.0, 10.0, 100.0, 1e4] {
            let lhs = log_diff_proximity(&f, &[1.0], r, &quad).unwrap();
            let rhs = shift_proximity_bound(&f, &[1.0], 2.0, r, &quad);
            assert!(lhs <= rhs + 1e-9, "r={r}: {lhs} > {rhs}");
        }
    }

    #[test]
    fn q_quotient_proximity_is_finite_and_small_relative_to_t() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let f = two_term_quotient();
        let m = q_diff_proximity(&f, 2.0, 100.0, &quad).unwrap();
        assert!(m.is_finite());
    }

    #[test]
    fn growth_estimates_recover_linear_growth() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let f = two_term_quotient();
        let grid: Vec<f64> = (0..=40).map(|i| 10f64.powf(i as f64 / 10.0)).collect();
        let g = growth_estimate(&f, &grid, &quad).unwrap();
        assert!((g.rho - 1.0).abs() < 0.1, "rho {}", g.rho);
        assert!(g.subnormal);

        let c = TropicalRational::constant(1, 2.0);
        let gc = growth_estimate(&c, &grid, &quad).unwrap();
        assert_eq!(gc.rho, 0.0);

        let short: Vec<f64> = vec![1.0, 2.0, 3.0];
        assert!(matches!(
            growth_estimate(&f, &short, &quad),
            Err(NevanlinnaError::DegenerateGrid(_))
        ));
    }

    #[test]
    fn csv_rendering_uses_the_pinned_header_and_comment_metadata() {
        let quad = make_quadrature(1, 2, 7).unwrap();
        let f = two_term_quotient();
        let table = char_table(&f, &[1.0, 2.0, 3.0], &quad).unwrap();
        let csv = table.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("# dim: 1"));
        assert_eq!(lines.next(), Some("# scheme: exact-pair"));
        assert_eq!(lines.next(), Some("# nodes: 2"));
        assert_eq!(lines.next(), Some("# seed: 7"));
        assert_eq!(lines.next(), Some("r,m,n,N,T"));
        assert_eq!(lines.next(), Some("1,0,0,0,0"));
        let json = table.to_json();
        assert!(json.contains("\"N\""));
        assert!(json.contains("exact-pair"));
    }
}
