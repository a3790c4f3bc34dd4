//! Antipodally paired quadratures on the unit sphere.
//!
//! All sphere integrals in this crate are averages: a quadrature holds unit
//! nodes with positive weights summing to 1, so `sum_i w_i g(theta_i)`
//! approximates `(1/omega_n) int_{S^{n-1}} g dsigma`. Nodes come in exact
//! antipodal pairs (`nodes[i + K/2]` is the literal negation of `nodes[i]`),
//! which makes one ray slice serve both directions and turns the
//! one-variable Jensen identity into a per-pair structural fact.
//!
//! Schemes by dimension: `n = 1` is the exact two-point rule on `{+1, -1}`;
//! `n = 2` places `K` equally spaced angles; `n >= 3` draws `K/2` seeded
//! Gaussian directions and appends their negations. Construction is
//! deterministic in `(dim, size, seed)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

/// Errors for quadrature construction and grid-based functionals.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NevanlinnaError {
    /// Node counts must be even and at least 2 (antipodal pairing).
    #[error("quadrature size must be an even number >= 2, got {0}")]
    BadSize(usize),
    /// The radius grid does not satisfy the documented preconditions.
    #[error("degenerate radius grid: {0}")]
    DegenerateGrid(String),
}

/// Node placement rule of a [`SphereQuadrature`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadScheme {
    /// Dimension 1: the exact average over `{+1, -1}`.
    ExactPair,
    /// Dimension 2: equally spaced angles.
    UniformAngle,
    /// Dimension >= 3: seeded antipodally symmetrized Gaussian directions.
    MonteCarlo,
}

impl std::fmt::Display for QuadScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            QuadScheme::ExactPair => "exact-pair",
            QuadScheme::UniformAngle => "uniform-angle",
            QuadScheme::MonteCarlo => "monte-carlo",
        };
        write!(f, "{name}")
    }
}

/// Default angular node count for dimension >= 2.
///
/// The uniform-angle rule converges quadratically on kinked integrands;
/// 8192 nodes put the worst observed error of the bundled corner-locus
/// integrals near 3e-7, comfortably inside the 1e-6 contracts, and the
/// count is divisible by 8 so axis and diagonal directions are nodes.
pub const DEFAULT_ANGULAR_NODES: usize = 8192;

/// A unit-sphere quadrature with antipodally paired nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereQuadrature {
    dim: usize,
    scheme: QuadScheme,
    seed: u64,
    nodes: Vec<Vec<f64>>,
    weights: Vec<f64>,
}

impl SphereQuadrature {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scheme(&self) -> QuadScheme {
        self.scheme
    }

    /// Seed used for node placement (meaningful for the Monte Carlo scheme).
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Vec<f64>] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Number of antipodal pairs (`len() / 2`).
    pub fn pair_count(&self) -> usize {
        self.nodes.len() / 2
    }

    /// The `i`-th antipodal pair: its representative node (the antipode is
    /// its negation at index `i + pair_count()`) and the combined weight of
    /// both nodes.
    pub fn pair(&self, i: usize) -> (&[f64], f64) {
        assert!(i < self.pair_count(), "pair index {i} out of range");
        let w = self.weights[i] + self.weights[i + self.pair_count()];
        (&self.nodes[i], w)
    }

    /// Weighted average of `g` over the nodes, accumulated in node-index
    /// order so results are bit-reproducible for a given `(seed, K)`.
    pub fn average<G: FnMut(&[f64]) -> f64>(&self, mut g: G) -> f64 {
        let mut acc = 0.0;
        for (node, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * g(node);
        }
        acc
    }
}

/// Surface area of the unit sphere `S^{n-1}`, `2 pi^{n/2} / Gamma(n/2)`.
///
/// The half-integer gamma value is computed by the exact recurrence from
/// `Gamma(1/2) = sqrt(pi)` and `Gamma(1) = 1`, so small dimensions come out
/// to mathematical constants: `omega_1 = 2`, `omega_2 = 2 pi`,
/// `omega_3 = 4 pi`.
///
/// # Panics
///
/// Panics when `n = 0`.
pub fn omega_n(n: usize) -> f64 {
    assert!(n >= 1, "sphere dimension must be at least 1");
    let pi = std::f64::consts::PI;
    // gamma(n/2) by the ascending recurrence Gamma(z+1) = z Gamma(z), and
    // pi^{n/2} as an integer power times an optional sqrt, so the sqrt(pi)
    // factors cancel exactly in odd dimensions.
    let mut gamma;
    let mut z;
    let mut power = pi.powi(n as i32 / 2);
    if n.is_multiple_of(2) {
        gamma = 1.0;
        z = 1.0;
    } else {
        gamma = pi.sqrt();
        z = 0.5;
        power *= pi.sqrt();
    }
    while z + 1.0 <= n as f64 / 2.0 {
        gamma *= z;
        z += 1.0;
    }
    2.0 * power / gamma
}

/// Builds the quadrature for dimension `n` with `size` nodes.
///
/// `size` must be even and at least 2. Dimension 1 always yields the exact
/// two-point rule regardless of `size`; dimension 2 yields `size` equally
/// spaced angles; higher dimensions draw `size/2` seeded Gaussian unit
/// vectors and append their exact negations. Weights are uniform.
pub fn make_quadrature(
    n: usize,
    size: usize,
    seed: u64,
) -> Result<SphereQuadrature, NevanlinnaError> {
    assert!(n >= 1, "sphere dimension must be at least 1");
    if size < 2 || !size.is_multiple_of(2) {
        return Err(NevanlinnaError::BadSize(size));
    }

    let (scheme, half): (QuadScheme, Vec<Vec<f64>>) = match n {
        1 => (QuadScheme::ExactPair, vec![vec![1.0]]),
        2 => {
            let k = size;
            let half = (0..k / 2)
                .map(|i| {
                    let phi = 2.0 * std::f64::consts::PI * i as f64 / k as f64;
                    vec![phi.cos(), phi.sin()]
                })
                .collect();
            (QuadScheme::UniformAngle, half)
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut half = Vec::with_capacity(size / 2);
            while half.len() < size / 2 {
                let v: Vec<f64> = (0..n)
                    .map(|_| StandardNormal.sample(&mut rng))
                    .collect();
                let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm < 1e-8 {
                    continue;
                }
                half.push(v.into_iter().map(|x| x / norm).collect());
            }
            (QuadScheme::MonteCarlo, half)
        }
    };

    let mut nodes = half.clone();
    nodes.extend(
        half.iter()
            .map(|v| v.iter().map(|&x| -x).collect::<Vec<f64>>()),
    );
    let k = nodes.len();
    let weights = vec![1.0 / k as f64; k];
    Ok(SphereQuadrature {
        dim: n,
        scheme,
        seed,
        nodes,
        weights,
    })
}
