//! Numeric certificates of Gondran-Minoux linear dependence.
//!
//! Functions `g_0, ..., g_k` are linearly dependent in the Gondran-Minoux
//! sense when the index set splits into disjoint nonempty halves `I` and `J`
//! and there are coefficients `a_i`, not all bottom, with
//!
//! ```text
//! max_{i in I} (a_i + g_i(x)) = max_{j in J} (a_j + g_j(x))   for all x.
//! ```
//!
//! "For all x" is not decidable from point evaluations alone, so
//! [`verify_gm_dependence`] checks the identity on a caller-supplied sample
//! set and reports the first violation; it certifies candidate splits rather
//! than discovering them.

use crate::semiring::{MaxPlusError, TropicalNumber};

/// Outcome of checking one candidate dependence split on a sample set.
#[derive(Debug, Clone, PartialEq)]
pub enum SplitCheck {
    /// Both sides agreed within tolerance at every sample point.
    Holds,
    /// First sample point where the sides differ, with both side values.
    Fails {
        sample_index: usize,
        lhs: f64,
        rhs: f64,
    },
}

impl SplitCheck {
    pub fn holds(&self) -> bool {
        matches!(self, SplitCheck::Holds)
    }
}

/// Checks a Gondran-Minoux dependence split `(I, J, a)` for the functions
/// `g` on the given sample points.
///
/// `i_set` and `j_set` must be disjoint, nonempty, and together cover
/// `0..g.len()`; the coefficients (one per function) must not all be bottom.
/// A side whose every coefficient is bottom evaluates to `-inf`; two `-inf`
/// sides agree. Finite sides agree when they differ by at most `tol`.
pub fn verify_gm_dependence<F>(
    g: &[F],
    i_set: &[usize],
    j_set: &[usize],
    coeffs: &[TropicalNumber],
    samples: &[Vec<f64>],
    tol: f64,
) -> Result<SplitCheck, MaxPlusError>
where
    F: Fn(&[f64]) -> f64,
{
    let k = g.len();
    if coeffs.len() != k {
        return Err(MaxPlusError::BadPartition(format!(
            "{} coefficients for {k} functions",
            coeffs.len()
        )));
    }
    if i_set.is_empty() || j_set.is_empty() {
        return Err(MaxPlusError::BadPartition(
            "both index sets must be nonempty".into(),
        ));
    }
    let mut seen = vec![false; k];
    for &idx in i_set.iter().chain(j_set) {
        if idx >= k {
            return Err(MaxPlusError::BadPartition(format!(
                "index {idx} out of range for {k} functions"
            )));
        }
        if seen[idx] {
            return Err(MaxPlusError::BadPartition(format!(
                "index {idx} appears twice across the split"
            )));
        }
        seen[idx] = true;
    }
    if !seen.iter().all(|&s| s) {
        return Err(MaxPlusError::BadPartition(
            "the split must cover every function index".into(),
        ));
    }
    if coeffs.iter().all(|c| c.is_bottom()) {
        return Err(MaxPlusError::BadPartition(
            "coefficients must not all be bottom".into(),
        ));
    }

    let side = |idxs: &[usize], x: &[f64]| -> f64 {
        let mut best = f64::NEG_INFINITY;
        for &i in idxs {
            if let Some(a) = coeffs[i].as_finite() {
                best = best.max(a + g[i](x));
            }
        }
        best
    };

    for (sample_index, x) in samples.iter().enumerate() {
        let lhs = side(i_set, x);
        let rhs = side(j_set, x);
        let agree = if lhs == f64::NEG_INFINITY || rhs == f64::NEG_INFINITY {
            lhs == rhs
        } else {
            (lhs - rhs).abs() <= tol
        };
        if !agree {
            return Ok(SplitCheck::Fails {
                sample_index,
                lhs,
                rhs,
            });
        }
    }
    Ok(SplitCheck::Holds)
}
