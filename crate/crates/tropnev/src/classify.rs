//! One-sided directional derivatives and root/pole classification.
//!
//! At a point `x`, the one-sided derivative of a tropical rational along
//! `phi` is read off the active terms: every term within the tie tolerance
//! of the maximum at `x` competes, and the derivative is the largest
//! directional slope among them (numerator minus denominator). The corner
//! defect
//!
//! ```text
//! J_f(x; phi) = d+_phi f(x) + d+_{-phi} f(x)
//! ```
//!
//! is 0 where the function is locally linear along `phi`, negative where
//! the graph folds concavely (poles), positive where it folds convexly
//! (roots), and symmetric under `phi -> -phi`.
//!
//! [`classify_point`] scans a sphere quadrature (plus the coordinate axes
//! and diagonals, where small examples concentrate their corner loci) and
//! integrates `|J|` over the negative or positive part to produce a real
//! multiplicity: the average over directions of the slope defect. In
//! dimension 1 the two-point rule makes the answer exact.

use serde::{Deserialize, Serialize};

use crate::poly::{PlfunError, TropicalPolynomial, TropicalRational};
use crate::quad::SphereQuadrature;

/// Local type of a point of a tropical rational function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointKind {
    Smooth,
    Root,
    Pole,
}

impl std::fmt::Display for PointKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            PointKind::Smooth => "smooth",
            PointKind::Root => "root",
            PointKind::Pole => "pole",
        };
        write!(f, "{name}")
    }
}

/// Classification of a point with its real multiplicity.
///
/// Poles report the average of `|J|` over the directions with `J < 0`,
/// roots the average over `J > 0`, smooth points 0. A point can carry
/// negative `J` in some directions and positive `J` in others; the pole
/// clause takes precedence and only the pole multiplicity is reported.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointClass {
    pub kind: PointKind,
    pub multiplicity: f64,
}

fn check_compatible(f: &TropicalRational, x: &[f64], phi: &[f64]) -> Result<(), PlfunError> {
    if x.len() != f.dim() {
        return Err(PlfunError::DimMismatch {
            expected: f.dim(),
            got: x.len(),
        });
    }
    if phi.len() != f.dim() {
        return Err(PlfunError::DimMismatch {
            expected: f.dim(),
            got: phi.len(),
        });
    }
    if x.iter().chain(phi).any(|v| !v.is_finite()) {
        return Err(PlfunError::NonFinitePoint);
    }
    Ok(())
}

/// Largest directional slope among the terms active at `x` (within `tol`
/// of the maximum).
fn poly_dir_deriv(p: &TropicalPolynomial, x: &[f64], phi: &[f64], tol: f64) -> f64 {
    let vmax = p.value_unchecked(x);
    let mut best = f64::NEG_INFINITY;
    for term in p.terms() {
        let mut v = term.coeff.value();
        for (m, xi) in term.expo.iter().zip(x) {
            v += m * xi;
        }
        if v >= vmax - tol {
            let slope: f64 = term.expo.iter().zip(phi).map(|(m, p)| m * p).sum();
            if slope > best {
                best = slope;
            }
        }
    }
    best
}

/// One-sided directional derivative `d+_phi f(x)`, computed exactly from
/// the active terms of numerator and denominator.
pub fn dir_deriv_plus(
    f: &TropicalRational,
    x: &[f64],
    phi: &[f64],
    tol: f64,
) -> Result<f64, PlfunError> {
    check_compatible(f, x, phi)?;
    Ok(poly_dir_deriv(f.num(), x, phi, tol) - poly_dir_deriv(f.den(), x, phi, tol))
}

/// Corner defect `J_f(x; phi) = d+_phi f(x) + d+_{-phi} f(x)`; symmetric in
/// `phi -> -phi` by construction.
pub fn jump_j(
    f: &TropicalRational,
    x: &[f64],
    phi: &[f64],
    tol: f64,
) -> Result<f64, PlfunError> {
    check_compatible(f, x, phi)?;
    let neg: Vec<f64> = phi.iter().map(|v| -v).collect();
    Ok(poly_dir_deriv(f.num(), x, phi, tol) - poly_dir_deriv(f.den(), x, phi, tol)
        + poly_dir_deriv(f.num(), x, &neg, tol)
        - poly_dir_deriv(f.den(), x, &neg, tol))
}

/// Axis and diagonal directions used to widen the pole/root detection scan
/// beyond the quadrature nodes; multiplicities still come from the
/// quadrature alone. Diagonals are included up to dimension 8.
fn detection_directions(n: usize) -> Vec<Vec<f64>> {
    let mut dirs = Vec::new();
    for i in 0..n {
        for sign in [1.0, -1.0] {
            let mut e = vec![0.0; n];
            e[i] = sign;
            dirs.push(e);
        }
    }
    if (2..=8).contains(&n) {
        let scale = 1.0 / (n as f64).sqrt();
        for mask in 0..(1usize << n) {
            let d: Vec<f64> = (0..n)
                .map(|i| if mask >> i & 1 == 1 { -scale } else { scale })
                .collect();
            dirs.push(d);
        }
    }
    dirs
}

/// Classifies `x` as smooth, root, or pole and reports the multiplicity.
///
/// The kind is decided on the sign of `J` over the quadrature nodes plus
/// the axis/diagonal detection directions: any `J < -tol` makes a pole,
/// otherwise any `J > tol` makes a root, otherwise the point is smooth.
/// The multiplicity is the quadrature average of `|J|` over the matching
/// sign class; in dimension 1 this is the exact two-point average.
pub fn classify_point(
    f: &TropicalRational,
    x: &[f64],
    quad: &SphereQuadrature,
    tol: f64,
) -> Result<PointClass, PlfunError> {
    if quad.dim() != f.dim() {
        return Err(PlfunError::DimMismatch {
            expected: f.dim(),
            got: quad.dim(),
        });
    }
    let mut node_j = Vec::with_capacity(quad.len());
    let mut has_neg = false;
    let mut has_pos = false;
    for node in quad.nodes() {
        let j = jump_j(f, x, node, tol)?;
        has_neg |= j < -tol;
        has_pos |= j > tol;
        node_j.push(j);
    }
    for dir in detection_directions(f.dim()) {
        let j = jump_j(f, x, &dir, tol)?;
        has_neg |= j < -tol;
        has_pos |= j > tol;
    }

    let kind = if has_neg {
        PointKind::Pole
    } else if has_pos {
        PointKind::Root
    } else {
        PointKind::Smooth
    };
    let multiplicity = match kind {
        PointKind::Smooth => 0.0,
        PointKind::Pole => quad
            .weights()
            .iter()
            .zip(&node_j)
            .map(|(w, j)| if *j < -tol { w * j.abs() } else { 0.0 })
            .sum(),
        PointKind::Root => quad
            .weights()
            .iter()
            .zip(&node_j)
            .map(|(w, j)| if *j > tol { w * j } else { 0.0 })
            .sum(),
    };
    Ok(PointClass { kind, multiplicity })
}
