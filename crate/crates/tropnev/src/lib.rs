//! Value-distribution toolkit for max-plus (tropical) rational functions in
//! several variables.
//!
//! A tropical polynomial is a finite maximum of affine terms
//! `c + <m, x>` with real coefficients `c` and real exponent vectors `m`; a
//! tropical rational function is a difference of two such maxima. These are
//! exactly the piecewise-linear convex (resp. DC) functions on `R^n`, and the
//! classical value-distribution quantities of meromorphic functions have
//! sharp, finitary analogues for them:
//!
//! * roots and poles become corner loci of the piecewise-linear graph, with
//!   real-valued multiplicities read off slope jumps ([`classify`]),
//! * the proximity, counting, and characteristic functions `m`, `N`, `T`
//!   become sphere averages and jump-weighted sums over ray slices
//!   ([`nevanlinna`], [`slice`]),
//! * a Jensen-type identity `T(r,f) - T(r,1/f) = f(0)` holds without error
//!   term, and the classical second-main-theorem machinery (Cartan
//!   characteristic, Casorati determinant, truncated counting) turns into
//!   checkable piecewise-linear identities ([`projective`], [`casorati`],
//!   [`smt`]).
//!
//! The crate is organized bottom-up:
//!
//! * [`semiring`]: scalar max-plus arithmetic over `R ∪ {-inf}`.
//! * [`matrix`]: max-plus matrices, the permanent-style tropical determinant,
//!   and Gondran-Minoux row regularity.
//! * [`dependence`]: numeric verification of Gondran-Minoux linear
//!   dependence splits.
//! * [`poly`]: tropical polynomials and rationals, evaluation, arithmetic,
//!   shifts, and JSON (de)serialization.
//! * [`slice`]: exact one-dimensional restrictions along rays, breakpoint
//!   extraction, and a query-only breakpoint localizer for black-box slices.
//! * [`classify`]: one-sided directional derivatives, the corner defect
//!   `J_f(x; phi)`, and root/pole/smooth classification with multiplicity.
//! * [`quad`]: antipodally paired sphere quadratures (exact pair in
//!   dimension 1, uniform angles in dimension 2, seeded Monte Carlo above).
//! * [`nevanlinna`]: the functionals `m`, `n`, `N`, `T`, the Jensen
//!   residual, pole-shift invariance gaps, shift-quotient proximity, and
//!   growth-order estimation.
//! * [`projective`]: tropical projective maps, homogeneous hypersurface
//!   evaluation and composition, the Cartan characteristic, Weil functions,
//!   and defects.
//! * [`casorati`]: shift families, the Casorati determinant as a max-plus
//!   determinant, and degeneracy probes for linear combinations.
//! * [`smt`]: report-producing checkers for the second-main-theorem and
//!   defect-relation inequalities (additive and multiplicative shifts).
//! * [`corpus`]: seeded random function corpora used by the test suites and
//!   examples.
//!
//! Every quantity that admits two independent computation routes (closed
//! form vs. quadrature, assignment solver vs. permutation enumeration,
//! symbolic slicer vs. black-box localizer) keeps both routes public so the
//! test suites can cross-check them; see the `examples/` directory for
//! runnable tours of each capability.

pub mod casorati;
pub mod classify;
pub mod corpus;
pub mod dependence;
pub mod matrix;
pub mod nevanlinna;
pub mod poly;
pub mod projective;
pub mod quad;
pub mod semiring;
pub mod slice;
pub mod smt;

pub use casorati::{
    casorati_roots_counting, ddg, essential_terms, CasoratiError, CombinationBasis, DdgEstimate,
    EssentialTerms, ShiftFamily, ShiftStep,
};
pub use classify::{classify_point, dir_deriv_plus, jump_j, PointClass, PointKind};
pub use dependence::{verify_gm_dependence, SplitCheck};
pub use matrix::TropicalMatrix;
pub use nevanlinna::{
    char_table, characteristic, counting, counting_density, fmt_gap, growth_estimate,
    jensen_residual, log_diff_proximity, proximity, q_diff_proximity, shift_proximity_bound,
    CharTable, FmtGap, GrowthEstimate,
};
pub use poly::{Monomial, PlfunError, TropicalPolynomial, TropicalRational};
pub use projective::{
    cartan_characteristic, complete_poly_gap, compose, defect, hyper_fmt_report,
    hyper_fmt_residual, hyper_proximity, one_dim_identity_residual, weil_function,
    HomogeneousPolynomial, HyperFmtReport, ProjectiveError, ProjectiveMap, ProjectivePoint,
};
pub use quad::{make_quadrature, omega_n, NevanlinnaError, QuadScheme, SphereQuadrature};
pub use semiring::{t_add, t_div, t_mul, t_pow, MaxPlusError, TropicalNumber};
pub use slice::{blackbox_slice, ray_slice, BlackboxConfig, Breakpoint, RaySlice};
pub use smt::{
    defect_relation_check, q_smt_check, smt_check, DefectReport, SmtError, SmtReport, SmtRow,
};

/// Default tolerance for tie detection in directional derivatives and for
/// discarding numerically silent slope jumps.
pub const DEFAULT_TOL: f64 = 1e-9;
