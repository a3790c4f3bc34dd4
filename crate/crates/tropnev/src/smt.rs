//! Second-main-theorem inequality reports.
//!
//! For a map `f : R^n -> TP^m` and hypersurfaces `P_1, ..., P_q` of
//! degrees `d_j`, the central inequality bounds
//! `(q - M - 1 - lambda) T_f(r)` by the tail counting sum
//! `sum_{j >= M+2} (1/d_j) N(r, 1 (/) P_j(f))` up to `o(T_f(r))`, where
//! `d = lcm(d_j)`, `M + 1` is the number of degree-`d` monomials in
//! `m + 1` coordinates, and `lambda` is the degree of degeneracy of the
//! tail compositions written over the monomial basis.
//!
//! The reports tabulate every ingredient per grid radius: both theorem
//! sides, the Casorati middle bound when it exists, and the slack. They
//! never claim asymptotic proofs; `lambda` travels as an interval when
//! the essential-term search cannot certify exactness, and the headline
//! slack is evaluated at the strict end (`lambda_min`, the largest
//! left-hand side).

use serde::Serialize;

use crate::casorati::{
    counting_from_slices, ddg, CasoratiError, CombinationBasis, ShiftFamily, ShiftStep,
};
use crate::nevanlinna::{QuadMeta, SliceSet};
use crate::poly::{PlfunError, TropicalPolynomial, TropicalRational};
use crate::projective::{
    compose, passes_nondegeneracy, HomogeneousPolynomial, ProjectiveError, ProjectiveMap,
};
use crate::quad::SphereQuadrature;
use crate::semiring::TropicalNumber;
use crate::slice::BlackboxConfig;

/// Probe budget for the essential-term searches behind `lambda`.
const LAMBDA_PROBES: usize = 4096;

/// Allowance on the defect-sum bounds: a finite grid estimates a liminf
/// from above, overshooting the limit by roughly `m(r_max)/T(r_max)`, so
/// the bound flags tolerate this much before reporting a violation.
pub const DEFECT_GRID_TOL: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SmtError {
    #[error("need at least as many hypersurfaces as the target dimension: q = {q} < m = {m}")]
    TooFewHypersurfaces { q: usize, m: usize },
    #[error("hypersurface {index} lives on TP^{got}, the map targets TP^{expected}")]
    MixedArity {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("the map image is not separated from hypersurface {index} at any probe point")]
    DegenerateMap { index: usize },
    #[error("degenerate radius grid: {0}")]
    DegenerateGrid(String),
    #[error("bad shift step: {0}")]
    BadShift(String),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error(transparent)]
    Casorati(#[from] CasoratiError),
    #[error(transparent)]
    Slicer(#[from] PlfunError),
}

/// One radius row of a second-main-theorem report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SmtRow {
    pub r: f64,
    /// Cartan characteristic `T_f(r)`.
    pub t_f: f64,
    /// `N(r, 1 (/) P_j(f))` per hypersurface, unweighted.
    pub n_j: Vec<f64>,
    /// `N(r, 1 (/) C)` for the Casorati determinant of the first `M + 1`
    /// compositions raised to common degree; absent when `q < M + 1`.
    pub casorati_n: Option<f64>,
    /// `(q - M - 1 - lambda_min) T_f(r)`: the larger left-hand side.
    pub lhs_at_lambda_min: f64,
    /// `(q - M - 1 - lambda_max) T_f(r)`: the smaller left-hand side.
    pub lhs_at_lambda_max: f64,
    /// Middle bound `sum_j (1/d_j) N_j - (1/d) N(r, 1 (/) C)`; absent
    /// with the Casorati term.
    pub middle: Option<f64>,
    /// Tail sum `sum_{j >= M+2} (1/d_j) N_j`.
    pub rhs: f64,
    /// `rhs - lhs_at_lambda_min`: slack of the strict inequality.
    pub slack: f64,
}

/// Tabulated second-main-theorem inequality over a radius grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SmtReport {
    /// Number of hypersurfaces `q`.
    pub q: usize,
    /// Target dimension `m` of the map.
    pub target_dim: usize,
    /// Common degree `d = lcm(d_j)`.
    pub common_degree: u32,
    /// Hypersurface degrees `d_j` in input order.
    pub degrees: Vec<u32>,
    /// Number of degree-`d` monomials in `m + 1` coordinates (`M + 1`);
    /// the Casorati order and the degeneracy yardstick.
    pub basis_size: usize,
    /// Degree-of-degeneracy interval `[lambda_min, lambda_max]` of the
    /// tail compositions; the ends agree when every essential-term
    /// search certified exactness.
    pub lambda: (usize, usize),
    /// Set when `q <= M + 1 + lambda_min`: the left-hand side is not
    /// positive and the inequality holds vacuously.
    pub vacuous: bool,
    /// Growth-order estimate of the sup-norm characteristic when the
    /// grid spans three decades.
    pub rho_hat: Option<f64>,
    pub quad: QuadMeta,
    pub rows: Vec<SmtRow>,
}

impl SmtReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// CSV rendering: `#` metadata comments, then one row per radius with
    /// header `r,T,N_1..N_q,casN,lhs_min,lhs_max,middle,rhs,slack`.
    /// Absent Casorati columns render empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# q: {}\n", self.q));
        out.push_str(&format!("# target_dim: {}\n", self.target_dim));
        out.push_str(&format!("# common_degree: {}\n", self.common_degree));
        out.push_str(&format!("# basis_size: {}\n", self.basis_size));
        out.push_str(&format!(
            "# lambda: [{}, {}]\n",
            self.lambda.0, self.lambda.1
        ));
        out.push_str(&format!("# vacuous: {}\n", self.vacuous));
        if let Some(rho) = self.rho_hat {
            out.push_str(&format!("# rho_hat: {rho}\n"));
        }
        out.push_str(&format!("# dim: {}\n", self.quad.dim));
        out.push_str(&format!("# scheme: {}\n", self.quad.scheme));
        out.push_str(&format!("# nodes: {}\n", self.quad.size));
        out.push_str(&format!("# seed: {}\n", self.quad.seed));
        out.push('r');
        out.push_str(",T");
        for j in 1..=self.q {
            out.push_str(&format!(",N_{j}"));
        }
        out.push_str(",casN,lhs_min,lhs_max,middle,rhs,slack\n");
        for row in &self.rows {
            out.push_str(&format!("{},{}", row.r, row.t_f));
            for n in &row.n_j {
                out.push_str(&format!(",{n}"));
            }
            match row.casorati_n {
                Some(v) => out.push_str(&format!(",{v}")),
                None => out.push(','),
            }
            out.push_str(&format!(
                ",{},{}",
                row.lhs_at_lambda_min, row.lhs_at_lambda_max
            ));
            match row.middle {
                Some(v) => out.push_str(&format!(",{v}")),
                None => out.push(','),
            }
            out.push_str(&format!(",{},{}\n", row.rhs, row.slack));
        }
        out
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm_all(degrees: impl Iterator<Item = u64>) -> u64 {
    degrees.fold(1, |acc, d| acc / gcd(acc, d) * d)
}

fn validate_grid(r_grid: &[f64]) -> Result<(), SmtError> {
    if r_grid.is_empty() {
        return Err(SmtError::DegenerateGrid("empty grid".into()));
    }
    if r_grid[0] <= 0.0 || !r_grid[0].is_finite() {
        return Err(SmtError::DegenerateGrid(
            "radii must be positive and finite".into(),
        ));
    }
    for w in r_grid.windows(2) {
        if w[1] <= w[0] || !w[1].is_finite() {
            return Err(SmtError::DegenerateGrid(
                "radii must be strictly increasing and finite".into(),
            ));
        }
    }
    Ok(())
}

/// All degree-`d` exponent indices on `m + 1` coordinates, lexicographic.
fn monomial_indices(m: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, total: u32, out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>) {
        if len == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(len - 1, total - first, out, prefix);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m + 1, d, &mut out, &mut Vec::new());
    out
}

/// Shared skeleton of [`smt_check`] and [`q_smt_check`].
fn build_report(
    f: &ProjectiveMap,
    p_list: &[HomogeneousPolynomial],
    step: ShiftStep,
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<SmtReport, SmtError> {
    let m = f.target_dim();
    let q = p_list.len();
    if q < m {
        return Err(SmtError::TooFewHypersurfaces { q, m });
    }
    for (index, p) in p_list.iter().enumerate() {
        if p.target_dim() != m {
            return Err(SmtError::MixedArity {
                index,
                expected: m,
                got: p.target_dim(),
            });
        }
    }
    assert_eq!(quad.dim(), f.dim(), "quadrature dimension mismatch");
    validate_grid(r_grid)?;
    match &step {
        ShiftStep::Translate(c) => {
            if c.len() != f.dim() {
                return Err(SmtError::BadShift(format!(
                    "shift vector has length {}, expected {}",
                    c.len(),
                    f.dim()
                )));
            }
            if c.iter().any(|v| !v.is_finite()) || c.iter().all(|&v| v == 0.0) {
                return Err(SmtError::BadShift(
                    "shift vector must be finite and nonzero".into(),
                ));
            }
        }
        ShiftStep::Scale(s) => {
            if !s.is_finite() || *s == 0.0 || *s == 1.0 {
                return Err(SmtError::BadShift(format!(
                    "scale must be finite and outside {{0, 1}}, got {s}"
                )));
            }
        }
    }

    let d = lcm_all(p_list.iter().map(|p| p.degree() as u64)) as u32;
    let indices = monomial_indices(m, d);
    let basis_size = indices.len();

    // Compositions and their nondegeneracy probes.
    let mut compositions = Vec::with_capacity(q);
    for (index, p) in p_list.iter().enumerate() {
        let g = compose(p, f)?;
        if !passes_nondegeneracy(p, f, &g) {
            return Err(SmtError::DegenerateMap { index });
        }
        compositions.push(g);
    }

    // lambda: degeneracy of the tail compositions, written over the
    // degree-d monomial basis with the coefficients of P_j^(d/d_j).
    let lambda = if q > basis_size {
        let basis: Vec<TropicalPolynomial> = indices
            .iter()
            .map(|idx| {
                let mono = HomogeneousPolynomial::new(
                    m,
                    d,
                    [(idx.clone(), TropicalNumber::ONE)],
                )
                .expect("single monomial is well-formed");
                compose(&mono, f).expect("arity was checked")
            })
            .collect();
        let combinations: Vec<CombinationBasis> = p_list[basis_size..]
            .iter()
            .map(|p| {
                let raised = p.pow(d / p.degree()).expect("degree divides lcm");
                let coeff_map: std::collections::BTreeMap<&[u32], f64> =
                    raised.coeffs().collect();
                let coeffs = indices
                    .iter()
                    .map(|idx| match coeff_map.get(idx.as_slice()) {
                        Some(&c) => TropicalNumber::from_finite(c),
                        None => TropicalNumber::BOTTOM,
                    })
                    .collect();
                CombinationBasis::new(basis.clone(), coeffs)
                    .expect("a homogeneous polynomial has a finite coefficient")
            })
            .collect();
        let est = ddg(&combinations, basis_size, LAMBDA_PROBES);
        (est.lower, est.upper)
    } else {
        (0, 0)
    };

    // Slice everything once at the largest radius.
    let r_max = *r_grid.last().expect("grid is nonempty");
    let sup = TropicalRational::entire(f.sup_polynomial());
    let sup_slices = SliceSet::new(&sup, quad, r_max);
    let sup0 = sup.value(&vec![0.0; f.dim()]);
    let comp_slices: Vec<SliceSet> = compositions
        .iter()
        .map(|g| SliceSet::new(&TropicalRational::entire(g.clone()), quad, r_max))
        .collect();

    // Casorati of the first M+1 compositions raised to common degree.
    let cas_slices = if q >= basis_size {
        let base: Vec<TropicalPolynomial> = compositions[..basis_size]
            .iter()
            .zip(p_list)
            .map(|(g, p)| g.scale((d / p.degree()) as f64))
            .collect();
        let family = ShiftFamily::new(base, step)?;
        Some(family.casorati_slices(quad, r_max, &BlackboxConfig::default())?)
    } else {
        None
    };

    // Growth estimate for the header when the grid is wide enough.
    let rho_hat = crate::nevanlinna::growth_estimate(&sup, r_grid, quad)
        .ok()
        .map(|g| g.rho);

    let coeff_min = q as f64 - basis_size as f64 - lambda.1 as f64;
    let coeff_max = q as f64 - basis_size as f64 - lambda.0 as f64;
    let vacuous = coeff_max <= 0.0;

    let rows = r_grid
        .iter()
        .map(|&r| {
            let t_f = sup_slices.mean(r) - sup0;
            let n_j: Vec<f64> = comp_slices.iter().map(|s| s.counting(r, true)).collect();
            let casorati_n = cas_slices
                .as_ref()
                .map(|slices| counting_from_slices(slices, r));
            let weighted_total: f64 = n_j
                .iter()
                .zip(p_list)
                .map(|(n, p)| n / p.degree() as f64)
                .sum();
            let rhs: f64 = n_j
                .iter()
                .zip(p_list)
                .skip(basis_size)
                .map(|(n, p)| n / p.degree() as f64)
                .sum();
            let middle = casorati_n.map(|cn| weighted_total - cn / d as f64);
            let lhs_at_lambda_min = coeff_max * t_f;
            let lhs_at_lambda_max = coeff_min * t_f;
            SmtRow {
                r,
                t_f,
                n_j,
                casorati_n,
                lhs_at_lambda_min,
                lhs_at_lambda_max,
                middle,
                rhs,
                slack: rhs - lhs_at_lambda_min,
            }
        })
        .collect();

    Ok(SmtReport {
        q,
        target_dim: m,
        common_degree: d,
        degrees: p_list.iter().map(|p| p.degree()).collect(),
        basis_size,
        lambda,
        vacuous,
        rho_hat,
        quad: QuadMeta::from(quad),
        rows,
    })
}

/// Second-main-theorem report for the additive shift `x -> x + c`.
///
/// Per grid radius the report carries `T_f`, every `N(r, 1 (/) P_j(f))`,
/// the Casorati counting term (when `q >= M + 1`), both theorem sides,
/// and the slack `rhs - lhs`. The contract is observational: slack
/// should sit above `-epsilon` with the deficit attributed to the
/// `o(T_f)` term; nothing asymptotic is claimed.
pub fn smt_check(
    f: &ProjectiveMap,
    p_list: &[HomogeneousPolynomial],
    c: &[f64],
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<SmtReport, SmtError> {
    build_report(f, p_list, ShiftStep::Translate(c.to_vec()), r_grid, quad)
}

/// Second-main-theorem report for the multiplicative shift `x -> q x`.
///
/// The radius grid must be geometric (constant ratio) so the q-shifted
/// rays line up with grid radii; the header carries a growth-order
/// estimate when the grid spans three decades.
pub fn q_smt_check(
    f: &ProjectiveMap,
    p_list: &[HomogeneousPolynomial],
    scale: f64,
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<SmtReport, SmtError> {
    validate_grid(r_grid)?;
    if r_grid.len() >= 3 {
        let ratio = r_grid[1] / r_grid[0];
        for w in r_grid.windows(2) {
            if ((w[1] / w[0]) / ratio - 1.0).abs() > 1e-9 {
                return Err(SmtError::DegenerateGrid(
                    "multiplicative-shift grids must be geometric".into(),
                ));
            }
        }
    }
    build_report(f, p_list, ShiftStep::Scale(scale), r_grid, quad)
}

/// Defect sums compared against the degeneracy bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DefectReport {
    /// Grid-liminf defect estimate per hypersurface, input order.
    pub defects: Vec<f64>,
    pub sum_all: f64,
    /// Sum over the tail hypersurfaces (positions `M + 2 ..= q`).
    pub sum_tail: f64,
    pub lambda: (usize, usize),
    /// `M + 1`, the other summand of the total bound.
    pub basis_size: usize,
    /// `sum_all <= M + 1 + lambda_max + DEFECT_GRID_TOL` (the permissive
    /// end; grid estimates carry no proof either way).
    pub within_total_bound: bool,
    /// `sum_tail <= lambda_max + DEFECT_GRID_TOL`.
    pub within_tail_bound: bool,
    pub quad: QuadMeta,
}

impl DefectReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// CSV rendering: one row per hypersurface, then summary rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# basis_size: {}\n", self.basis_size));
        out.push_str(&format!(
            "# lambda: [{}, {}]\n",
            self.lambda.0, self.lambda.1
        ));
        out.push_str("j,defect\n");
        for (j, d) in self.defects.iter().enumerate() {
            out.push_str(&format!("{},{}\n", j + 1, d));
        }
        out.push_str(&format!("sum_all,{}\n", self.sum_all));
        out.push_str(&format!("sum_tail,{}\n", self.sum_tail));
        out
    }
}

/// Estimates every hypersurface defect on the grid and compares the sums
/// against `M + 1 + lambda` and `lambda`.
pub fn defect_relation_check(
    f: &ProjectiveMap,
    p_list: &[HomogeneousPolynomial],
    r_grid: &[f64],
    quad: &SphereQuadrature,
) -> Result<DefectReport, SmtError> {
    let m = f.target_dim();
    let q = p_list.len();
    if q < m {
        return Err(SmtError::TooFewHypersurfaces { q, m });
    }
    // The skeleton validates shapes and computes lambda; a throwaway unit
    // shift keeps the Casorati layer out of the way.
    let report = build_report(
        f,
        p_list,
        ShiftStep::Translate(vec![1.0; f.dim()]),
        r_grid,
        quad,
    )?;
    let mut defects = Vec::with_capacity(q);
    for (index, p) in p_list.iter().enumerate() {
        let est = crate::projective::defect(p, f, r_grid, quad).map_err(|e| match e {
            ProjectiveError::DegenerateMap => SmtError::DegenerateMap { index },
            other => SmtError::Projective(other),
        })?;
        defects.push(est);
    }
    let sum_all: f64 = defects.iter().sum();
    let sum_tail: f64 = defects.iter().skip(report.basis_size).sum();
    let lambda = report.lambda;
    Ok(DefectReport {
        within_total_bound: sum_all <= (report.basis_size + lambda.1) as f64 + DEFECT_GRID_TOL,
        within_tail_bound: sum_tail <= lambda.1 as f64 + DEFECT_GRID_TOL,
        defects,
        sum_all,
        sum_tail,
        lambda,
        basis_size: report.basis_size,
        quad: QuadMeta::from(quad),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::quad::make_quadrature;

    fn t(v: f64) -> TropicalNumber {
        TropicalNumber::from_finite(v)
    }

    fn poly(dim: usize, terms: &[(f64, &[f64])]) -> TropicalPolynomial {
        TropicalPolynomial::new(
            dim,
            terms
                .iter()
                .map(|(c, e)| Monomial::new(t(*c), e.to_vec()))
                .collect(),
        )
        .unwrap()
    }

    /// F = [(x (+) 1) : (x (+) 0)] and the three-hypersurface family
    /// P_j = x0 (+) (-v_j) (*) x1 with v_j in {-0.25, -0.5, -0.75}.
    fn corollary_instance() -> (ProjectiveMap, Vec<HomogeneousPolynomial>) {
        let f = ProjectiveMap::new(vec![
            poly(1, &[(1.0, &[0.0]), (0.0, &[1.0])]),
            poly(1, &[(0.0, &[0.0]), (0.0, &[1.0])]),
        ])
        .unwrap();
        let ps = [-0.25f64, -0.5, -0.75]
            .iter()
            .map(|v| {
                HomogeneousPolynomial::new(
                    1,
                    1,
                    vec![(vec![1, 0], t(0.0)), (vec![0, 1], t(-v))],
                )
                .unwrap()
            })
            .collect();
        (f, ps)
    }

    #[test]
    fn monomial_basis_enumeration_counts_binomials() {
        assert_eq!(monomial_indices(1, 1), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(monomial_indices(1, 2).len(), 3);
        assert_eq!(monomial_indices(2, 2).len(), 6);
        assert_eq!(monomial_indices(2, 3).len(), 10);
    }

    #[test]
    fn report_shape_and_lambda_for_the_one_dimensional_instance() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let (f, ps) = corollary_instance();
        let grid: Vec<f64> = (10..=100).map(|i| i as f64).collect();
        let report = smt_check(&f, &ps, &[1.0], &grid, &quad).unwrap();
        assert_eq!(report.q, 3);
        assert_eq!(report.target_dim, 1);
        assert_eq!(report.common_degree, 1);
        assert_eq!(report.basis_size, 2);
        assert_eq!(report.lambda, (0, 0));
        assert!(!report.vacuous);

        for (row, &r) in report.rows.iter().zip(&grid) {
            // T_f(r) = (r - 1) / 2 and roots of P_j(f) at 1 + v_j.
            assert!((row.t_f - (r - 1.0) / 2.0).abs() < 1e-12);
            for (n, v) in row.n_j.iter().zip([-0.25, -0.5, -0.75]) {
                assert!((n - (r - 1.0 - v) / 2.0).abs() < 1e-12);
            }
            // Tail is the single j = 3 hypersurface.
            assert!((row.rhs - (r - 0.25) / 2.0).abs() < 1e-12);
            assert!((row.lhs_at_lambda_min - (r - 1.0) / 2.0).abs() < 1e-12);
            // Slack = -v_3 / 2 = 0.375 exactly.
            assert!((row.slack - 0.375).abs() < 1e-12, "slack {}", row.slack);
            assert!(row.slack >= -0.5);
        }
    }

    #[test]
    fn casorati_middle_term_matches_the_pair_sum() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let (f, ps) = corollary_instance();
        let grid: Vec<f64> = (10..=40).map(|i| i as f64).collect();
        let report = smt_check(&f, &ps, &[1.0], &grid, &quad).unwrap();
        for (row, &r) in report.rows.iter().zip(&grid) {
            // C = det[[h1(x), h1(x+1)], [h2(x), h2(x+1)]] with
            // h_j = max(x - v_j, 1): roots at 1 + v_1 and 1 + v_2 merge
            // into N_cas = N_1 + N_2 here.
            let n_cas = row.casorati_n.unwrap();
            let expected = (r - 0.75) / 2.0 + (r - 0.5) / 2.0;
            assert!((n_cas - expected).abs() < 1e-6, "r={r}: {n_cas}");
            let middle = row.middle.unwrap();
            let weighted: f64 = row.n_j.iter().sum();
            assert!((middle - (weighted - n_cas)).abs() < 1e-9);
            // Middle bound sits between the theorem sides.
            assert!(middle >= row.rhs - 1e-6);
        }
    }

    #[test]
    fn vacuous_reports_are_flagged() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let (f, ps) = corollary_instance();
        let grid: Vec<f64> = (10..=20).map(|i| i as f64).collect();
        // q = 2 = M + 1: coefficient q - M - 1 - lambda = 0.
        let report = smt_check(&f, &ps[..2], &[1.0], &grid, &quad).unwrap();
        assert!(report.vacuous);
        for row in &report.rows {
            assert!(row.slack >= 0.0);
            assert_eq!(row.rhs, 0.0);
        }
    }

    #[test]
    fn shape_errors_are_reported() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let (f, ps) = corollary_instance();
        let grid: Vec<f64> = vec![1.0, 2.0];
        assert!(matches!(
            smt_check(&f, &[], &[1.0], &grid, &quad),
            Err(SmtError::TooFewHypersurfaces { q: 0, m: 1 })
        ));
        let wrong_arity =
            HomogeneousPolynomial::new(2, 1, vec![(vec![1, 0, 0], t(0.0))]).unwrap();
        assert!(matches!(
            smt_check(&f, &[ps[0].clone(), wrong_arity], &[1.0], &grid, &quad),
            Err(SmtError::MixedArity { index: 1, .. })
        ));
        assert!(matches!(
            smt_check(&f, &ps, &[0.0], &grid, &quad),
            Err(SmtError::BadShift(_))
        ));
        assert!(matches!(
            smt_check(&f, &ps, &[1.0], &[2.0, 1.0], &quad),
            Err(SmtError::DegenerateGrid(_))
        ));
    }

    #[test]
    fn degenerate_compositions_are_rejected_with_the_index() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let constant = ProjectiveMap::new(vec![
            poly(1, &[(0.0, &[0.0])]),
            poly(1, &[(0.0, &[0.0])]),
        ])
        .unwrap();
        let p = HomogeneousPolynomial::new(
            1,
            1,
            vec![(vec![1, 0], t(0.0)), (vec![0, 1], t(0.0))],
        )
        .unwrap();
        let grid: Vec<f64> = vec![1.0, 2.0];
        assert!(matches!(
            smt_check(&constant, &[p], &[1.0], &grid, &quad),
            Err(SmtError::DegenerateMap { index: 0 })
        ));
    }

    #[test]
    fn q_variant_mirrors_the_additive_slack() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let (f, ps) = corollary_instance();
        let grid: Vec<f64> = (0..=20).map(|i| 10.0 * 1.2f64.powi(i)).collect();
        let report = q_smt_check(&f, &ps, 2.0, &grid, &quad).unwrap();
        assert_eq!(report.lambda, (0, 0));
        for row in &report.rows {
            assert!((row.slack - 0.375).abs() < 1e-9);
            assert!(row.slack >= -0.5);
        }

        assert!(matches!(
            q_smt_check(&f, &ps, 1.0, &grid, &quad),
            Err(SmtError::BadShift(_))
        ));
        let arithmetic: Vec<f64> = (10..=20).map(|i| i as f64).collect();
        assert!(matches!(
            q_smt_check(&f, &ps, 2.0, &arithmetic, &quad),
            Err(SmtError::DegenerateGrid(_))
        ));
    }

    #[test]
    fn growth_header_appears_on_wide_grids() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let (f, ps) = corollary_instance();
        let wide: Vec<f64> = (0..=40).map(|i| 10f64.powf(i as f64 / 10.0)).collect();
        let report = smt_check(&f, &ps, &[1.0], &wide, &quad).unwrap();
        let rho = report.rho_hat.unwrap();
        assert!((rho - 1.0).abs() < 0.1, "rho {rho}");
        let narrow: Vec<f64> = (10..=40).map(|i| i as f64).collect();
        let report = smt_check(&f, &ps, &[1.0], &narrow, &quad).unwrap();
        assert_eq!(report.rho_hat, None);
    }

    #[test]
    fn defect_relation_sums_stay_inside_the_bounds() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let (f, ps) = corollary_instance();
        let grid: Vec<f64> = (0..=80).map(|i| 10f64.powf(i as f64 / 20.0)).collect();
        let report = defect_relation_check(&f, &ps, &grid, &quad).unwrap();
        assert_eq!(report.defects.len(), 3);
        for d in &report.defects {
            assert!((0.0..0.05).contains(d), "defect {d}");
        }
        assert!(report.sum_tail < 0.05);
        assert!(report.within_total_bound);
        assert!(report.within_tail_bound);
    }

    #[test]
    fn serializations_carry_the_headline_numbers() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        let (f, ps) = corollary_instance();
        let grid: Vec<f64> = (10..=12).map(|i| i as f64).collect();
        let report = smt_check(&f, &ps, &[1.0], &grid, &quad).unwrap();
        let json = report.to_json();
        assert!(json.contains("\"lambda\""));
        assert!(json.contains("\"slack\""));
        let csv = report.to_csv();
        assert!(csv.contains("# lambda: [0, 0]"));
        let header = csv
            .lines()
            .find(|l| l.starts_with("r,"))
            .expect("header line");
        assert_eq!(header, "r,T,N_1,N_2,N_3,casN,lhs_min,lhs_max,middle,rhs,slack");
    }
}
