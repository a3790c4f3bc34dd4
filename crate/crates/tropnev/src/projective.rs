//! Max-plus projective space, holomorphic maps, hypersurfaces, and the
//! Cartan-style value distribution built on them.
//!
//! Points of `TP^m` are `(m+1)`-tuples of tropical numbers, not all
//! bottom, up to adding one real to every coordinate. A holomorphic map
//! is a tuple of entire components with no common roots; a hypersurface
//! is the corner locus of a homogeneous polynomial `P`. The theorem-scale
//! checks ([`hyper_fmt_report`], [`complete_poly_gap`], [`defect`],
//! [`one_dim_identity_residual`]) tabulate both sides of the
//! corresponding identities over a radius grid, slicing once per
//! antipodal node pair and reading every radius off the slices.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::nevanlinna::{QuadMeta, SliceSet};
use crate::poly::{Monomial, TropicalPolynomial, TropicalRational};
use crate::quad::SphereQuadrature;
use crate::semiring::TropicalNumber;
use crate::DEFAULT_TOL;

/// Term-count cap for symbolic composition.
pub const MAX_COMPOSE_TERMS: usize = 100_000;

const PROBE_POINTS: usize = 128;
const PROBE_SCALE: f64 = 8.0;
const PROBE_SEED: u64 = 0x5452_4f50;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ProjectiveError {
    #[error("a projective point needs at least one coordinate that is not bottom")]
    BottomPoint,
    #[error("a projective map needs at least one component")]
    EmptyMap,
    #[error("component dimension mismatch: expected {expected}, got {got}")]
    MixedDimensions { expected: usize, got: usize },
    #[error("every component has a root at a probe point; the representation is not reduced")]
    CommonRoots,
    #[error("hypersurface degree must be positive")]
    ZeroDegree,
    #[error("bad exponent index: {0}")]
    BadIndex(String),
    #[error("a homogeneous polynomial needs at least one finite coefficient")]
    NoFiniteCoefficient,
    #[error("arity mismatch: polynomial expects {expected} coordinates, map has {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("the polynomial is not complete: some coefficient is bottom")]
    NotComplete,
    #[error("the map image is not separated from the hypersurface at any probe point")]
    DegenerateMap,
    #[error("the Cartan characteristic does not grow over the grid")]
    BoundedCharacteristic,
    #[error("degenerate radius grid: {0}")]
    DegenerateGrid(String),
    #[error("composition exceeded the term budget of {max_terms}")]
    TermBudget { max_terms: usize },
}

/// A point of tropical projective space `TP^m`: coordinates up to a
/// common additive constant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectivePoint {
    coords: Vec<TropicalNumber>,
}

impl ProjectivePoint {
    /// Builds a point; at least one coordinate must be finite.
    pub fn new(coords: Vec<TropicalNumber>) -> Result<Self, ProjectiveError> {
        if coords.is_empty() || coords.iter().all(|c| c.is_bottom()) {
            return Err(ProjectiveError::BottomPoint);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn coords(&self) -> &[TropicalNumber] {
        &self.coords
    }

    /// Canonical representative: subtracts the maximum coordinate, so the
    /// largest coordinate becomes 0 and bottom coordinates stay bottom.
    pub fn normalize(&self) -> ProjectivePoint {
        let max = self
            .coords
            .iter()
            .filter_map(|c| c.as_finite())
            .fold(f64::NEG_INFINITY, f64::max);
        let coords = self
            .coords
            .iter()
            .map(|c| match c.as_finite() {
                Some(v) => TropicalNumber::from_finite(v - max),
                None => TropicalNumber::BOTTOM,
            })
            .collect();
        ProjectivePoint { coords }
    }

    /// Equality in `TP^m`: canonical forms agree coordinate-wise within
    /// `tol` (bottom only matches bottom).
    pub fn projectively_equal(&self, other: &ProjectivePoint, tol: f64) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let (a, b) = (self.normalize(), other.normalize());
        a.coords
            .iter()
            .zip(&b.coords)
            .all(|(x, y)| match (x.as_finite(), y.as_finite()) {
                (Some(u), Some(v)) => (u - v).abs() <= tol,
                (None, None) => true,
                _ => false,
            })
    }
}

/// A tropical holomorphic map `R^n -> TP^m`: entire components in a
/// reduced representation (no common roots on the probe grid).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectiveMap {
    dim: usize,
    components: Vec<TropicalPolynomial>,
}

/// Deterministic probe grid: the origin plus seeded uniform points in
/// `[-scale, scale]^dim`.
fn probe_grid(dim: usize, count: usize, scale: f64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    let mut points = vec![vec![0.0; dim]];
    for _ in 0..count {
        points.push((0..dim).map(|_| rng.gen_range(-scale..=scale)).collect());
    }
    points
}

/// Number of terms of `p` whose value at `x` is within `tol` of the max.
fn active_terms(p: &TropicalPolynomial, x: &[f64], tol: f64) -> usize {
    let vmax = p.value_unchecked(x);
    p.terms()
        .iter()
        .filter(|t| {
            let v = t.coeff.value() + t.expo.iter().zip(x).map(|(m, xi)| m * xi).sum::<f64>();
            v >= vmax - tol
        })
        .count()
}

impl ProjectiveMap {
    /// Builds a map from entire components, verifying the reduced
    /// representation at sample scale: no probe-grid point is a root of
    /// every component (a root of an entire function is a point where its
    /// maximum is attained at least twice).
    pub fn new(components: Vec<TropicalPolynomial>) -> Result<Self, ProjectiveError> {
        let dim = components.first().ok_or(ProjectiveError::EmptyMap)?.dim();
        for c in &components {
            if c.dim() != dim {
                return Err(ProjectiveError::MixedDimensions {
                    expected: dim,
                    got: c.dim(),
                });
            }
        }
        for x in probe_grid(dim, PROBE_POINTS, PROBE_SCALE) {
            if components
                .iter()
                .all(|c| active_terms(c, &x, DEFAULT_TOL) >= 2)
            {
                return Err(ProjectiveError::CommonRoots);
            }
        }
        Ok(ProjectiveMap { dim, components })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Target dimension `m` (the map lands in `TP^m`).
    pub fn target_dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[TropicalPolynomial] {
        &self.components
    }

    /// Evaluates to a projective point.
    pub fn eval(&self, x: &[f64]) -> ProjectivePoint {
        let coords = self
            .components
            .iter()
            .map(|c| TropicalNumber::from_finite(c.value(x)))
            .collect();
        ProjectivePoint { coords }
    }

    /// Sup norm `||f(x)||`: the maximum component value.
    pub fn sup_norm_at(&self, x: &[f64]) -> f64 {
        self.components
            .iter()
            .map(|c| c.value_unchecked(x))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// The entire function `f_0 (+) ... (+) f_m`, whose value at `x` is
    /// `||f(x)||`.
    pub fn sup_polynomial(&self) -> TropicalPolynomial {
        let mut acc = self.components[0].clone();
        for c in &self.components[1..] {
            acc = acc.t_add(c).expect("components share the ambient dimension");
        }
        acc
    }

    /// Parses the JSON map format `{"dim": n, "components": [poly, ...]}`,
    /// running the constructor checks.
    pub fn from_json(s: &str) -> Result<Self, String> {
        #[derive(Deserialize)]
        struct Doc {
            dim: usize,
            components: Vec<TropicalPolynomial>,
        }
        let doc: Doc = serde_json::from_str(s).map_err(|e| e.to_string())?;
        let map = ProjectiveMap::new(doc.components).map_err(|e| e.to_string())?;
        if map.dim() != doc.dim {
            return Err(format!(
                "declared dimension {} does not match components of dimension {}",
                doc.dim,
                map.dim()
            ));
        }
        Ok(map)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("map serializes")
    }
}

/// A homogeneous max-plus polynomial in `m+1` coordinates: finite
/// coefficients indexed by nonnegative integer multi-indices summing to
/// the degree `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousPolynomial {
    m: usize,
    d: u32,
    coeffs: BTreeMap<Vec<u32>, f64>,
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All multi-indices of length `len` with entries summing to `total`, in
/// lexicographic order.
fn multi_indices(len: usize, total: u32) -> Vec<Vec<u32>> {
    if len == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in multi_indices(len - 1, total - first) {
            let mut idx = Vec::with_capacity(len);
            idx.push(first);
            idx.append(&mut rest);
            out.push(idx);
        }
    }
    out
}

impl HomogeneousPolynomial {
    /// Builds a hypersurface polynomial from `(index, coefficient)` pairs.
    ///
    /// Bottom coefficients are dropped (they mark absent terms); duplicate
    /// indices keep the larger coefficient. Every index must have length
    /// `m + 1` and sum to `d`, and at least one coefficient must be
    /// finite.
    pub fn new(
        m: usize,
        d: u32,
        coeffs: impl IntoIterator<Item = (Vec<u32>, TropicalNumber)>,
    ) -> Result<Self, ProjectiveError> {
        if d == 0 {
            return Err(ProjectiveError::ZeroDegree);
        }
        let mut map = BTreeMap::new();
        for (idx, c) in coeffs {
            if idx.len() != m + 1 {
                return Err(ProjectiveError::BadIndex(format!(
                    "index {:?} has length {}, expected {}",
                    idx,
                    idx.len(),
                    m + 1
                )));
            }
            if idx.iter().map(|&i| i as u64).sum::<u64>() != d as u64 {
                return Err(ProjectiveError::BadIndex(format!(
                    "index {idx:?} does not sum to the degree {d}"
                )));
            }
            if let Some(v) = c.as_finite() {
                map.entry(idx)
                    .and_modify(|old: &mut f64| *old = old.max(v))
                    .or_insert(v);
            }
        }
        if map.is_empty() {
            return Err(ProjectiveError::NoFiniteCoefficient);
        }
        Ok(HomogeneousPolynomial { m, d, coeffs: map })
    }

    /// The complete polynomial of degree `d` with every coefficient equal
    /// to `c`.
    pub fn complete_constant(m: usize, d: u32, c: f64) -> Self {
        let coeffs = multi_indices(m + 1, d)
            .into_iter()
            .map(|idx| (idx, TropicalNumber::from_finite(c)));
        HomogeneousPolynomial::new(m, d, coeffs).expect("complete polynomial is well-formed")
    }

    /// Target dimension `m`: the polynomial lives on `TP^m`.
    pub fn target_dim(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&[u32], f64)> {
        self.coeffs.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Complete means every one of the `C(m+d, d)` coefficients is finite.
    pub fn is_complete(&self) -> bool {
        self.coeffs.len() as u128 == binomial((self.m as u64) + (self.d as u64), self.d as u64)
    }

    /// Largest coefficient, the `||a||` of the Weil function.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.values().fold(f64::NEG_INFINITY, |a, &b| a.max(b))
    }

    pub fn min_coeff(&self) -> f64 {
        self.coeffs.values().fold(f64::INFINITY, |a, &b| a.min(b))
    }

    /// Tropical power `P^(k)`: by idempotency of max, every coefficient
    /// and index scales by `k`; the degree becomes `k d`.
    pub fn pow(&self, k: u32) -> Result<Self, ProjectiveError> {
        if k == 0 {
            return Err(ProjectiveError::ZeroDegree);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(idx, &c)| {
                (
                    idx.iter().map(|&i| i * k).collect::<Vec<u32>>(),
                    k as f64 * c,
                )
            })
            .collect::<BTreeMap<_, _>>();
        Ok(HomogeneousPolynomial {
            m: self.m,
            d: self.d * k,
            coeffs,
        })
    }

    /// Evaluates at explicit coordinates: `max_I (c_I + sum_k i_k v_k)`.
    ///
    /// # Panics
    ///
    /// Panics when `values.len() != m + 1`.
    pub fn direct_eval(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.m + 1, "coordinate count mismatch");
        self.coeffs
            .iter()
            .map(|(idx, &c)| c + idx.iter().zip(values).map(|(&i, v)| i as f64 * v).sum::<f64>())
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Parses the JSON hypersurface format
    /// `{"m": m, "d": d, "coeffs": [{"I": [i0, ...], "c": number|"-inf"}, ...]}`.
    pub fn from_json(s: &str) -> Result<Self, String> {
        #[derive(Deserialize)]
        struct CoeffDoc {
            #[serde(rename = "I")]
            i: Vec<u32>,
            c: TropicalNumber,
        }
        #[derive(Deserialize)]
        struct Doc {
            m: usize,
            d: u32,
            coeffs: Vec<CoeffDoc>,
        }
        let doc: Doc = serde_json::from_str(s).map_err(|e| e.to_string())?;
        HomogeneousPolynomial::new(doc.m, doc.d, doc.coeffs.into_iter().map(|cd| (cd.i, cd.c)))
            .map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(idx, &c)| serde_json::json!({"I": idx, "c": c}))
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({
            "m": self.m,
            "d": self.d,
            "coeffs": coeffs,
        }))
        .expect("hypersurface serializes")
    }
}

/// Symbolic composition `P(f) = (+)_I c_I (*) f_0^(i_0) (*) ... (*) f_m^(i_m)`,
/// an entire function whose value equals the direct evaluation exactly.
///
/// Duplicate exponent vectors are pruned after every product; the running
/// term count is capped at [`MAX_COMPOSE_TERMS`].
pub fn compose(
    p: &HomogeneousPolynomial,
    f: &ProjectiveMap,
) -> Result<TropicalPolynomial, ProjectiveError> {
    if p.m + 1 != f.components.len() {
        return Err(ProjectiveError::ArityMismatch {
            expected: p.m + 1,
            got: f.components.len(),
        });
    }
    let mut all_terms: Vec<Monomial> = Vec::new();
    for (idx, &c) in &p.coeffs {
        let mut part = TropicalPolynomial::constant(f.dim, c);
        for (k, &ik) in idx.iter().enumerate() {
            if ik == 0 {
                continue;
            }
            part = part
                .t_mul(&f.components[k].scale(ik as f64))
                .expect("components share the ambient dimension");
            if part.terms().len() > MAX_COMPOSE_TERMS {
                return Err(ProjectiveError::TermBudget {
                    max_terms: MAX_COMPOSE_TERMS,
                });
            }
        }
        all_terms.extend_from_slice(part.terms());
        if all_terms.len() > MAX_COMPOSE_TERMS {
            return Err(ProjectiveError::TermBudget {
                max_terms: MAX_COMPOSE_TERMS,
            });
        }
    }
    Ok(TropicalPolynomial::new(f.dim, all_terms).expect("composition has finite terms"))
}

/// Cartan characteristic `T_f(r)`: sphere average of `||f(r theta)||`
/// minus `||f(0)||`.
///
/// # Panics
///
/// Panics when `r <= 0` or the quadrature dimension does not match.
pub fn cartan_characteristic(f: &ProjectiveMap, r: f64, quad: &SphereQuadrature) -> f64 {
    assert!(r > 0.0 && r.is_finite(), "radius must be positive");
    assert_eq!(quad.dim(), f.dim, "quadrature dimension mismatch");
    let mut scaled = vec![0.0; f.dim];
    let avg = quad.average(|node| {
        for (s, x) in scaled.iter_mut().zip(node) {
            *s = r * x;
        }
        f.sup_norm_at(&scaled)
    });
    avg - f.sup_norm_at(&vec![0.0; f.dim])
}

/// Weil function of the hypersurface `P` at `f(x)`:
/// `d ||f(x)|| + ||a|| - P(f(x))`, nonnegative by construction (`||a||` is
/// the largest coefficient of `P`).
///
/// # Panics
///
/// Panics on arity mismatch between `P` and the map.
pub fn weil_function(p: &HomogeneousPolynomial, f: &ProjectiveMap, x: &[f64]) -> f64 {
    assert_eq!(
        p.m + 1,
        f.components.len(),
        "polynomial arity does not match the map"
    );
    let values: Vec<f64> = f.components.iter().map(|c| c.value_unchecked(x)).collect();
    let sup = values.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    p.d as f64 * sup + p.max_coeff() - p.direct_eval(&values)
}

/// Hypersurface proximity `m_f(r, V_P)`: sphere average of the Weil
/// function at radius `r`.
///
/// # Panics
///
/// Panics when `r <= 0`, on arity mismatch, or on quadrature dimension
/// mismatch.
pub fn hyper_proximity(
    p: &HomogeneousPolynomial,
    f: &ProjectiveMap,
    r: f64,
    quad: &SphereQuadrature,
) -> f64 {
    assert!(r > 0.0 && r.is_finite(), "radius must be positive");
    assert_eq!(quad.dim(), f.dim, "quadrature dimension mismatch");
    let mut scaled = vec![0.0; f.dim];
    quad.average(|node| {
        for (s, x) in scaled.iter_mut().zip(node) {
            *s = r * x;
        }
        weil_function(p, f, &scaled)
    })
}

/// Sampled nondegeneracy probe for `f(R^n) (not subset of) V_P`: some
/// probe point must see a single monomial of `P` dominate `P(f(x))` with
/// margin above the tolerance, and the composition must not be constant.
/// A failure reports degeneracy without proof.
pub(crate) fn passes_nondegeneracy(
    p: &HomogeneousPolynomial,
    f: &ProjectiveMap,
    g: &TropicalPolynomial,
) -> bool {
    if g.is_constant() {
        return false;
    }
    if p.coeffs.len() == 1 {
        // A single-monomial P never attains its max twice; the corner
        // locus is empty.
        return true;
    }
    for x in probe_grid(f.dim, PROBE_POINTS, PROBE_SCALE) {
        let values: Vec<f64> = f.components.iter().map(|c| c.value_unchecked(&x)).collect();
        let mut best = f64::NEG_INFINITY;
        let mut second = f64::NEG_INFINITY;
        for (idx, &c) in &p.coeffs {
            let v = c + idx.iter().zip(&values).map(|(&i, fv)| i as f64 * fv).sum::<f64>();
            if v > best {
                second = best;
                best = v;
            } else if v > second {
                second = v;
            }
        }
        if best - second > DEFAULT_TOL {
            return true;
        }
    }
    false
}

fn validate_grid(r_grid: &[f64]) -> Result<(), ProjectiveError> {
    if r_grid.is_empty() {
        return Err(ProjectiveError::DegenerateGrid("empty grid".into()));
    }
    if r_grid[0] <= 0.0 || !r_grid[0].is_finite() {
        return Err(ProjectiveError::DegenerateGrid(
            "radii must be positive and finite".into(),
        ));
    }
    for w in r_grid.windows(2) {
        if w[1] <= w[0] || !w[1].is_finite() {
            return Err(ProjectiveError::DegenerateGrid(
                "radii must be strictly increasing and finite".into(),
            ));
        }
    }
    Ok(())
}

/// Both sides of the hypersurface first-main-theorem identity
/// `m_f(r, V_P) + N(r, 1 (/) P(f)) = d T_f(r) + O(1)` over a radius grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HyperFmtReport {
    pub r_grid: Vec<f64>,
    /// `m_f(r, V_P)` per radius.
    pub hyper_proximity: Vec<f64>,
    /// `N(r, 1 (/) P(f))` per radius: integrated roots of the composition.
    pub counting: Vec<f64>,
    /// `d T_f(r)` per radius.
    pub scaled_cartan: Vec<f64>,
    /// `hyper_proximity + counting - scaled_cartan`; constant up to
    /// rounding per ray, so its spread over the grid stays within the
    /// coefficient spread of `P` plus quadrature error.
    pub residual: Vec<f64>,
    pub quad: QuadMeta,
}

impl HyperFmtReport {
    /// CSV rendering with header `r,mf,Nf,dTf,residual` and `#` metadata
    /// comments, mirroring the characteristic table format.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# dim: {}\n", self.quad.dim));
        out.push_str(&format!("# scheme: {}\n", self.quad.scheme));
        out.push_str(&format!("# nodes: {}\n", self.quad.size));
        out.push_str(&format!("# seed: {}\n", self.quad.seed));
        out.push_str("r,mf,Nf,dTf,residual\n");
        for i in 0..self.r_grid.len() {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                self.r_grid[i],
                self.hyper_proximity[i],
                self.counting[i],
                self.scaled_cartan[i],
                self.residual[i]
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Tabulates the hypersurface first-main-theorem identity over a grid.
///
/// Uses the slice identities: along each ray, `||f||` is the envelope of
/// all component terms and `P(f)` is the composition's envelope, so every
/// column is exact per ray. Errors with [`ProjectiveError::DegenerateMap`]
/// when the sampled nondegeneracy probe fails.
pub fn hyper_fmt_report(
    p: &HomogeneousPolynomial,
    f: &ProjectiveMap,
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<HyperFmtReport, ProjectiveError> {
    if p.m + 1 != f.components.len() {
        return Err(ProjectiveError::ArityMismatch {
            expected: p.m + 1,
            got: f.components.len(),
        });
    }
    assert_eq!(quad.dim(), f.dim, "quadrature dimension mismatch");
    validate_grid(r_grid)?;
    let g = compose(p, f)?;
    if !passes_nondegeneracy(p, f, &g) {
        return Err(ProjectiveError::DegenerateMap);
    }
    let r_max = *r_grid.last().expect("grid is nonempty");
    let origin = vec![0.0; f.dim];
    let sup = TropicalRational::entire(f.sup_polynomial());
    let comp = TropicalRational::entire(g);
    let sup_slices = SliceSet::new(&sup, quad, r_max);
    let comp_slices = SliceSet::new(&comp, quad, r_max);
    let sup0 = sup.value(&origin);
    let norm_a = p.max_coeff();
    let d = p.d as f64;

    let mut report = HyperFmtReport {
        r_grid: r_grid.to_vec(),
        hyper_proximity: Vec::with_capacity(r_grid.len()),
        counting: Vec::with_capacity(r_grid.len()),
        scaled_cartan: Vec::with_capacity(r_grid.len()),
        residual: Vec::with_capacity(r_grid.len()),
        quad: QuadMeta::from(quad),
    };
    for &r in r_grid {
        let mean_sup = sup_slices.mean(r);
        let mean_comp = comp_slices.mean(r);
        let mf = d * mean_sup + norm_a - mean_comp;
        let nf = comp_slices.counting(r, true);
        let dtf = d * (mean_sup - sup0);
        report.hyper_proximity.push(mf);
        report.counting.push(nf);
        report.scaled_cartan.push(dtf);
        report.residual.push(mf + nf - dtf);
    }
    Ok(report)
}

/// Residual sequence of the hypersurface first main theorem; see
/// [`hyper_fmt_report`].
pub fn hyper_fmt_residual(
    p: &HomogeneousPolynomial,
    f: &ProjectiveMap,
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<Vec<f64>, ProjectiveError> {
    Ok(hyper_fmt_report(p, f, r_grid, quad)?.residual)
}

/// Gap sequence `T_f(r) - (1/d) N(r, 1 (/) P(f))` for a complete `P`.
///
/// Completeness pins `P(f)` between `min a + d ||f||` and
/// `max a + d ||f||`, so every gap value lies within
/// `[min a, max a] / d` of a constant.
pub fn complete_poly_gap(
    p: &HomogeneousPolynomial,
    f: &ProjectiveMap,
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<Vec<f64>, ProjectiveError> {
    if p.m + 1 != f.components.len() {
        return Err(ProjectiveError::ArityMismatch {
            expected: p.m + 1,
            got: f.components.len(),
        });
    }
    if !p.is_complete() {
        return Err(ProjectiveError::NotComplete);
    }
    assert_eq!(quad.dim(), f.dim, "quadrature dimension mismatch");
    validate_grid(r_grid)?;
    let g = TropicalRational::entire(compose(p, f)?);
    let sup = TropicalRational::entire(f.sup_polynomial());
    let r_max = *r_grid.last().expect("grid is nonempty");
    let sup_slices = SliceSet::new(&sup, quad, r_max);
    let comp_slices = SliceSet::new(&g, quad, r_max);
    let sup0 = sup.value(&vec![0.0; f.dim]);
    let d = p.d as f64;
    Ok(r_grid
        .iter()
        .map(|&r| (sup_slices.mean(r) - sup0) - comp_slices.counting(r, true) / d)
        .collect())
}

/// Finite-grid defect estimate
/// `min over the top decade of m_f(r, V_P) / (d T_f(r))`.
///
/// This is a grid liminf, not an extrapolation; values land in
/// `[0, 1 + epsilon]`. Errors with `DegenerateMap` when the
/// nondegeneracy probe fails and `BoundedCharacteristic` when `T_f` does
/// not grow over the grid.
pub fn defect(
    p: &HomogeneousPolynomial,
    f: &ProjectiveMap,
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<f64, ProjectiveError> {
    let report = hyper_fmt_report(p, f, r_grid, quad)?;
    let t_first = report.scaled_cartan[0];
    let t_last = *report.scaled_cartan.last().expect("grid is nonempty");
    if t_last - t_first <= 1e-9 * (1.0 + t_last.abs()) {
        return Err(ProjectiveError::BoundedCharacteristic);
    }
    let r_max = *r_grid.last().expect("grid is nonempty");
    let mut best: Option<f64> = None;
    for (i, &r) in r_grid.iter().enumerate() {
        if r < r_max / 10.0 || report.scaled_cartan[i] <= 1e-12 {
            continue;
        }
        let ratio = report.hyper_proximity[i] / report.scaled_cartan[i];
        best = Some(best.map_or(ratio, |b: f64| b.min(ratio)));
    }
    best.ok_or(ProjectiveError::BoundedCharacteristic)
}

/// Residual of the one-variable single-hypersurface identity
/// `T(r, f) = N(r, 1 (/) (f (+) a)) - N(r, f (+) a) + N(r, f) + O(1)`.
///
/// # Panics
///
/// Panics when `f` is constant or the quadrature dimension mismatches.
pub fn one_dim_identity_residual(
    f: &TropicalRational,
    a: f64,
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<Vec<f64>, ProjectiveError> {
    assert!(
        !(f.num().is_constant() && f.den().is_constant()),
        "the identity is vacuous for constant functions"
    );
    assert!(a.is_finite(), "shift level must be finite");
    assert_eq!(quad.dim(), f.dim(), "quadrature dimension mismatch");
    validate_grid(r_grid)?;
    let r_max = *r_grid.last().expect("grid is nonempty");
    let shifted = f.plus_const(TropicalNumber::from_finite(a));
    let base = SliceSet::new(f, quad, r_max);
    let shift = SliceSet::new(&shifted, quad, r_max);
    Ok(r_grid
        .iter()
        .map(|&r| {
            let t = base.characteristic(r, false);
            let rhs = shift.counting(r, true) - shift.counting(r, false) + base.counting(r, false);
            t - rhs
        })
        .collect())
}
