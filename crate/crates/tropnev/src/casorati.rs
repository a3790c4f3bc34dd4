//! Shift families, tropical Casorati determinants, and representation
//! length.
//!
//! A shift family holds entire base functions together with a shift step
//! (an additive translation of the argument or a multiplicative `q`
//! scaling). The Casorati determinant at a point is the tropical
//! determinant of the matrix whose `(i, j)` entry is the `j`-fold shift
//! of base function `i`; shifted entries are exact symbolic transforms of
//! the base polynomials, built once at construction.
//!
//! [`essential_terms`] measures the shortest-representation length of a
//! max-plus linear combination by probing for strict single-term
//! dominance; [`ddg`] aggregates it into the degree of degeneracy that
//! feeds the second-main-theorem reports.

use serde::Serialize;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::TropicalMatrix;
use crate::poly::{PlfunError, TropicalPolynomial};
use crate::quad::SphereQuadrature;
use crate::semiring::TropicalNumber;
use crate::slice::{blackbox_slice, upper_envelope, BlackboxConfig, RaySlice};
use crate::DEFAULT_TOL;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CasoratiError {
    #[error("a shift family needs at least one base function")]
    EmptyFamily,
    #[error("base dimension mismatch: expected {expected}, got {got}")]
    MixedDimensions { expected: usize, got: usize },
    #[error("bad shift step: {0}")]
    BadShift(String),
    #[error("point dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("a combination needs matching basis and coefficient counts")]
    LengthMismatch,
    #[error("a combination needs at least one finite coefficient")]
    NoFiniteCoefficient,
}

/// One application of the shift operator.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum ShiftStep {
    /// `h(x) -> h(x + c)` for a nonzero vector `c`.
    Translate(Vec<f64>),
    /// `h(x) -> h(q x)` for a scale `q` outside `{0, 1}`.
    Scale(f64),
}

/// Entire base functions `g_0, ..., g_M` with a shift step; evaluates
/// tropical Casorati determinants.
#[derive(Debug, Clone)]
pub struct ShiftFamily {
    dim: usize,
    base: Vec<TropicalPolynomial>,
    step: ShiftStep,
    /// `shifted[i][j]` is the exact symbolic `j`-fold shift of `base[i]`.
    shifted: Vec<Vec<TropicalPolynomial>>,
}

impl ShiftFamily {
    pub fn new(base: Vec<TropicalPolynomial>, step: ShiftStep) -> Result<Self, CasoratiError> {
        let dim = base.first().ok_or(CasoratiError::EmptyFamily)?.dim();
        for g in &base {
            if g.dim() != dim {
                return Err(CasoratiError::MixedDimensions {
                    expected: dim,
                    got: g.dim(),
                });
            }
        }
        match &step {
            ShiftStep::Translate(c) => {
                if c.len() != dim {
                    return Err(CasoratiError::BadShift(format!(
                        "shift vector has length {}, expected {dim}",
                        c.len()
                    )));
                }
                if c.iter().any(|v| !v.is_finite()) || c.iter().all(|&v| v == 0.0) {
                    return Err(CasoratiError::BadShift(
                        "shift vector must be finite and nonzero".into(),
                    ));
                }
            }
            ShiftStep::Scale(q) => {
                if !q.is_finite() || *q == 0.0 || *q == 1.0 {
                    return Err(CasoratiError::BadShift(format!(
                        "scale must be finite and outside {{0, 1}}, got {q}"
                    )));
                }
            }
        }
        let order = base.len();
        let shifted = base
            .iter()
            .map(|g| {
                (0..order)
                    .map(|j| match &step {
                        ShiftStep::Translate(c) => {
                            let delta: Vec<f64> = c.iter().map(|v| v * j as f64).collect();
                            g.shift(&delta).expect("shift preserves dimension")
                        }
                        ShiftStep::Scale(q) => g
                            .q_scale(q.powi(j as i32))
                            .expect("powers of a nonzero scale are nonzero"),
                    })
                    .collect()
            })
            .collect();
        Ok(ShiftFamily {
            dim,
            base,
            step,
            shifted,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Family order `M + 1`: the matrix is `order x order`.
    pub fn order(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[TropicalPolynomial] {
        &self.base
    }

    pub fn step(&self) -> &ShiftStep {
        &self.step
    }

    /// The numeric Casorati matrix `A_ij(x) = (j-fold shift of g_i)(x)`.
    pub fn matrix_at(&self, x: &[f64]) -> Result<TropicalMatrix, CasoratiError> {
        if x.len() != self.dim {
            return Err(CasoratiError::DimMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let k = self.order();
        let entries = self
            .shifted
            .iter()
            .flat_map(|row| {
                row.iter()
                    .map(|g| TropicalNumber::from_finite(g.value_unchecked(x)))
            })
            .collect();
        Ok(TropicalMatrix::new(k, k, entries).expect("entry count matches"))
    }

    /// Tropical Casorati determinant at `x`, via the assignment solver;
    /// finite because every entry is finite.
    pub fn casorati_eval(&self, x: &[f64]) -> Result<TropicalNumber, CasoratiError> {
        Ok(self
            .matrix_at(x)?
            .trop_det()
            .expect("matrix is square"))
    }

    /// Slices the pointwise Casorati function along each antipodal node
    /// pair of `quad` on `[-radius, radius]` with the black-box
    /// breakpoint search, returning `(combined weight, slice)` per pair.
    pub fn casorati_slices(
        &self,
        quad: &SphereQuadrature,
        radius: f64,
        cfg: &BlackboxConfig,
    ) -> Result<Vec<(f64, RaySlice)>, PlfunError> {
        assert_eq!(quad.dim(), self.dim, "quadrature dimension mismatch");
        assert!(radius > 0.0 && radius.is_finite(), "radius must be positive");
        let mut out = Vec::with_capacity(quad.pair_count());
        let mut x = vec![0.0; self.dim];
        for i in 0..quad.pair_count() {
            let (node, w) = quad.pair(i);
            let slice = blackbox_slice(
                |t| {
                    for (xi, ni) in x.iter_mut().zip(node) {
                        *xi = t * ni;
                    }
                    // The closure only reads prepared coordinates, so the
                    // interior mutability is confined to this cell.
                    self.casorati_eval(&x).expect("dimensions match").value()
                },
                -radius,
                radius,
                cfg,
            )?;
            out.push((w, slice));
        }
        Ok(out)
    }
}

/// Root-counting `N(r, 1 (/) C)` of the pointwise Casorati function `C`:
/// black-box slices along quadrature rays, closed-form counting of the
/// positive jumps strictly inside radius `r`.
pub fn casorati_roots_counting(
    family: &ShiftFamily,
    r: f64,
    quad: &SphereQuadrature,
) -> Result<f64, PlfunError> {
    let slices = family.casorati_slices(quad, r, &BlackboxConfig::default())?;
    Ok(counting_from_slices(&slices, r))
}

/// Closed-form `N(r, 1 (/) C)` from prebuilt `(weight, slice)` pairs:
/// positive jumps are roots of `C`, hence poles of the reciprocal.
pub(crate) fn counting_from_slices(slices: &[(f64, RaySlice)], r: f64) -> f64 {
    let mut acc = 0.0;
    for (w, slice) in slices {
        let mut s = 0.0;
        for bp in &slice.breakpoints {
            if bp.jump > 0.0 && bp.t.abs() < r {
                s += bp.jump * (r - bp.t.abs());
            }
        }
        acc += w * 0.5 * s;
    }
    acc
}

/// A max-plus linear combination `F = (+)_k a_k (*) g_k` over a fixed
/// entire basis.
#[derive(Debug, Clone)]
pub struct CombinationBasis {
    basis: Vec<TropicalPolynomial>,
    coeffs: Vec<TropicalNumber>,
}

impl CombinationBasis {
    pub fn new(
        basis: Vec<TropicalPolynomial>,
        coeffs: Vec<TropicalNumber>,
    ) -> Result<Self, CasoratiError> {
        if basis.is_empty() || basis.len() != coeffs.len() {
            return Err(CasoratiError::LengthMismatch);
        }
        let dim = basis[0].dim();
        for g in &basis {
            if g.dim() != dim {
                return Err(CasoratiError::MixedDimensions {
                    expected: dim,
                    got: g.dim(),
                });
            }
        }
        if coeffs.iter().all(|c| c.is_bottom()) {
            return Err(CasoratiError::NoFiniteCoefficient);
        }
        Ok(CombinationBasis { basis, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.basis[0].dim()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[TropicalNumber] {
        &self.coeffs
    }

    /// Value of the combination at `x`, skipping bottom coefficients.
    pub fn value(&self, x: &[f64]) -> f64 {
        self.coeffs
            .iter()
            .zip(&self.basis)
            .filter_map(|(a, g)| a.as_finite().map(|av| av + g.value_unchecked(x)))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Value of the single term `a_k (*) g_k`; bottom when `a_k` is.
    fn term_value(&self, k: usize, x: &[f64]) -> f64 {
        match self.coeffs[k].as_finite() {
            Some(a) => a + self.basis[k].value_unchecked(x),
            None => f64::NEG_INFINITY,
        }
    }
}

/// Result of an essential-term search; the witnessed set is a certified
/// lower bound for the representation length `l(F)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EssentialTerms {
    /// Indices where strict single-term dominance was witnessed at a
    /// probe point; each is provably in every representation.
    pub witnessed: Vec<usize>,
    /// Number of finite coefficients: the trivial upper bound for `l(F)`.
    pub finite_count: usize,
    /// Set when the witnessed set is provably exactly the essential set:
    /// either every finite index is witnessed, or (dimension 1) every
    /// unwitnessed index is certified redundant by exact envelope
    /// comparison.
    pub certified_exact: bool,
}

impl EssentialTerms {
    /// Certified lower bound for `l(F)`.
    pub fn min_length(&self) -> usize {
        self.witnessed.len()
    }

    /// Upper bound for `l(F)`: tight when exactness is certified.
    pub fn max_length(&self) -> usize {
        if self.certified_exact {
            self.witnessed.len()
        } else {
            self.finite_count
        }
    }
}

/// Deterministic dominance probes: the origin plus seeded directions at
/// geometrically growing radii (dominance regions are conical, so far
/// probes catch terms that win only at scale).
fn dominance_probes(dim: usize, budget: usize) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4553_5345);
    let mut points = vec![vec![0.0; dim]];
    let radii = [0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 64.0, 256.0, 1024.0, 4096.0];
    for i in 0..budget {
        let mut dir: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let norm = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm < 1e-12 {
            continue;
        }
        let r = radii[i % radii.len()];
        for d in &mut dir {
            *d *= r / norm;
        }
        points.push(dir);
    }
    points
}

/// In dimension 1 a combination is an upper envelope of lines; term `k`
/// is redundant exactly when deleting its lines leaves the envelope
/// unchanged.
fn certified_redundant_1d(comb: &CombinationBasis, k: usize) -> bool {
    let mut with: Vec<(f64, f64)> = Vec::new();
    let mut without: Vec<(f64, f64)> = Vec::new();
    for (j, (a, g)) in comb.coeffs.iter().zip(&comb.basis).enumerate() {
        let Some(av) = a.as_finite() else { continue };
        for t in g.terms() {
            let line = (t.expo[0], av + t.coeff.value());
            with.push(line);
            if j != k {
                without.push(line);
            }
        }
    }
    if without.is_empty() {
        return false;
    }
    let (hull_with, _) = upper_envelope(&with);
    let (hull_without, _) = upper_envelope(&without);
    hull_with.len() == hull_without.len()
        && hull_with
            .iter()
            .zip(&hull_without)
            .all(|(a, b)| (a.0 - b.0).abs() <= 1e-12 && (a.1 - b.1).abs() <= 1e-12)
}

/// Searches for the essential terms of a combination: indices whose term
/// strictly dominates the rest of the envelope at some probe point
/// (margin above the shared tolerance).
///
/// The witnessed set is a lower bound for the representation length in
/// any dimension; exactness is certified when all finite indices are
/// witnessed, and additionally in dimension 1 through exact envelope
/// comparison of each unwitnessed term.
pub fn essential_terms(comb: &CombinationBasis, probe_budget: usize) -> EssentialTerms {
    let dim = comb.dim();
    let finite: Vec<usize> = (0..comb.len())
        .filter(|&k| !comb.coeffs[k].is_bottom())
        .collect();
    let probes = dominance_probes(dim, probe_budget.max(8));
    let mut witnessed = Vec::new();
    for &k in &finite {
        let dominated = probes.iter().any(|x| {
            let own = comb.term_value(k, x);
            let others = finite
                .iter()
                .filter(|&&j| j != k)
                .map(|&j| comb.term_value(j, x))
                .fold(f64::NEG_INFINITY, f64::max);
            own > others + DEFAULT_TOL
        });
        if dominated {
            witnessed.push(k);
        }
    }
    let mut certified_exact = witnessed.len() == finite.len();
    if !certified_exact && dim == 1 {
        certified_exact = finite
            .iter()
            .filter(|k| !witnessed.contains(k))
            .all(|&k| certified_redundant_1d(comb, k));
    }
    EssentialTerms {
        witnessed,
        finite_count: finite.len(),
        certified_exact,
    }
}

/// Degree-of-degeneracy estimate: how many combinations have
/// representation length below the full order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DdgEstimate {
    /// Members whose length upper bound is already below the order.
    pub lower: usize,
    /// Members whose length lower bound leaves degeneracy possible.
    pub upper: usize,
}

/// Counts combinations with `l(F) < order` over a shared basis; `order`
/// is the full length `M + 1`. Interval semantics: `lower` counts
/// certified-degenerate members, `upper` adds every member whose
/// essential set could not be certified complete.
pub fn ddg(combinations: &[CombinationBasis], order: usize, probe_budget: usize) -> DdgEstimate {
    let mut lower = 0;
    let mut upper = 0;
    for comb in combinations {
        let ess = essential_terms(comb, probe_budget);
        if ess.max_length() < order {
            lower += 1;
        }
        if ess.min_length() < order {
            upper += 1;
        }
    }
    DdgEstimate { lower, upper }
}
