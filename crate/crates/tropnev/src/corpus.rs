//! Seeded random function corpora shared by the test suites and examples.
//!
//! Every generator is deterministic: a fixed seed feeds a ChaCha8 stream,
//! so repeated calls return identical corpora and failures reproduce
//! bit-for-bit. Coefficients live on the dyadic lattice `k/8` in `[-4, 4]`
//! and exponents on the lattice `k/4` in `[-3, 3]`; exponent vectors are
//! distinct within each polynomial, so every monomial carries its own
//! slope and the one-variable functionals evaluate in exact arithmetic
//! (no quadrature error enters for `n = 1`).

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::nevanlinna::SliceSet;
use crate::poly::{Monomial, TropicalPolynomial, TropicalRational};
use crate::projective::{compose, passes_nondegeneracy, HomogeneousPolynomial, ProjectiveMap};
use crate::quad::make_quadrature;
use crate::semiring::TropicalNumber;

/// Seed of [`standard_1d`].
pub const SEED_1D: u64 = 0x7472_6e31;
/// Seed of [`with_poles_1d`].
pub const SEED_POLES: u64 = 0x7472_6e50;
/// Seed of [`standard_2d`].
pub const SEED_2D: u64 = 0x7472_6e32;
/// Seed of [`hypersurface_pairs_1d`] and [`hypersurface_pairs_2d`].
pub const SEED_PAIRS: u64 = 0x7472_6e48;

/// Exponent lattice bound: slopes are `k/4` with `|k| <= SLOPE_STEPS`.
const SLOPE_STEPS: i32 = 12;
/// Coefficient lattice bound: coefficients are `k/8` with `|k| <= COEFF_STEPS`.
const COEFF_STEPS: i32 = 32;

/// Draws a polynomial with `terms` distinct lattice exponent vectors.
fn lattice_poly(rng: &mut ChaCha8Rng, dim: usize, terms: usize) -> TropicalPolynomial {
    let mut expos: BTreeSet<Vec<i32>> = BTreeSet::new();
    while expos.len() < terms {
        let e: Vec<i32> = (0..dim)
            .map(|_| rng.gen_range(-SLOPE_STEPS..=SLOPE_STEPS))
            .collect();
        expos.insert(e);
    }
    let monomials = expos
        .into_iter()
        .map(|e| {
            let coeff = rng.gen_range(-COEFF_STEPS..=COEFF_STEPS) as f64 / 8.0;
            Monomial::new(
                TropicalNumber::from_finite(coeff),
                e.into_iter().map(|k| k as f64 / 4.0).collect(),
            )
        })
        .collect();
    TropicalPolynomial::new(dim, monomials).expect("lattice terms are finite")
}

/// Draws a rational function with `num_terms` and `den_terms` ranges
/// sampled inclusively; `den_terms` starting at 1 admits entire-like
/// functions whose denominator is a single affine term.
fn lattice_rational(
    rng: &mut ChaCha8Rng,
    dim: usize,
    num_terms: (usize, usize),
    den_terms: (usize, usize),
) -> TropicalRational {
    let nt = rng.gen_range(num_terms.0..=num_terms.1);
    let dt = rng.gen_range(den_terms.0..=den_terms.1);
    let num = lattice_poly(rng, dim, nt);
    let den = lattice_poly(rng, dim, dt);
    TropicalRational::new(num, den).expect("lattice polynomials share the dimension")
}

/// 200 one-variable rational functions on the dyadic lattice.
///
/// The mix includes single-term denominators (no poles) and multi-term
/// denominators (kinked); breakpoints of every slice satisfy
/// `|t| <= 8 / 0.25 = 32`, so a slice of radius 64 sees them all.
pub fn standard_1d() -> Vec<TropicalRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_1D);
    (0..200)
        .map(|_| lattice_rational(&mut rng, 1, (2, 4), (1, 3)))
        .collect()
}

/// 50 one-variable rational functions that each carry at least one pole.
///
/// Candidates come from the same lattice generator with a kinked
/// denominator and are kept only when a radius-64 slice survey finds a
/// pole, so `inf {f(b) : b pole of f}` is finite for every entry.
pub fn with_poles_1d() -> Vec<TropicalRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_POLES);
    let quad = make_quadrature(1, 2, 0).expect("exact pair quadrature");
    let mut out = Vec::with_capacity(50);
    while out.len() < 50 {
        let f = lattice_rational(&mut rng, 1, (2, 4), (2, 3));
        let slices = SliceSet::new(&f, &quad, 64.0);
        if slices.pole_floor().is_some() {
            out.push(f);
        }
    }
    out
}

/// 50 two-variable rational functions on the dyadic lattice.
pub fn standard_2d() -> Vec<TropicalRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_2D);
    (0..50)
        .map(|_| lattice_rational(&mut rng, 2, (3, 5), (1, 3)))
        .collect()
}

/// All exponent indices of a degree-`d` homogeneous polynomial on two
/// projective coordinates: `(d, 0), (d-1, 1), ..., (0, d)`.
fn degree_indices(d: u32) -> Vec<Vec<u32>> {
    (0..=d).map(|j| vec![d - j, j]).collect()
}

/// Hypersurface/map pairs for composition checks: target `TP^1`, source
/// dimension `dim`, degrees alternating between 1 and 2.
///
/// Every returned pair passes the sampled nondegeneracy probe: the
/// composition is nonconstant and the map image is separated from the
/// hypersurface corner locus at some probe point.
fn hypersurface_pairs(dim: usize, count: usize, seed: u64) -> Vec<(HomogeneousPolynomial, ProjectiveMap)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (t0, t1) = (rng.gen_range(2..=3), rng.gen_range(2..=3));
        let f = ProjectiveMap::new(vec![
            lattice_poly(&mut rng, dim, t0),
            lattice_poly(&mut rng, dim, t1),
        ])
        .expect("components share the dimension");
        let d = 1 + (out.len() as u32 % 2);
        let mut coeffs: Vec<(Vec<u32>, TropicalNumber)> = Vec::new();
        for idx in degree_indices(d) {
            if rng.gen_range(0..4) > 0 {
                let c = rng.gen_range(-COEFF_STEPS..=COEFF_STEPS) as f64 / 8.0;
                coeffs.push((idx, TropicalNumber::from_finite(c)));
            }
        }
        if coeffs.len() < 2 {
            continue;
        }
        let p = HomogeneousPolynomial::new(1, d, coeffs).expect("finite lattice coefficients");
        let Ok(g) = compose(&p, &f) else { continue };
        if passes_nondegeneracy(&p, &f, &g) {
            out.push((p, f));
        }
    }
    out
}

/// 20 nondegenerate hypersurface/map pairs over a one-dimensional source.
pub fn hypersurface_pairs_1d() -> Vec<(HomogeneousPolynomial, ProjectiveMap)> {
    hypersurface_pairs(1, 20, SEED_PAIRS)
}

/// 20 nondegenerate hypersurface/map pairs over a two-dimensional source.
pub fn hypersurface_pairs_2d() -> Vec<(HomogeneousPolynomial, ProjectiveMap)> {
    hypersurface_pairs(2, 20, SEED_PAIRS ^ 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_have_the_advertised_sizes() {
        assert_eq!(standard_1d().len(), 200);
        assert_eq!(with_poles_1d().len(), 50);
        assert_eq!(standard_2d().len(), 50);
        assert_eq!(hypersurface_pairs_1d().len(), 20);
        assert_eq!(hypersurface_pairs_2d().len(), 20);
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(standard_1d(), standard_1d());
        assert_eq!(with_poles_1d(), with_poles_1d());
        assert_eq!(standard_2d(), standard_2d());
        assert_eq!(hypersurface_pairs_1d(), hypersurface_pairs_1d());
    }

    #[test]
    fn corpus_functions_stay_on_the_lattice() {
        for f in standard_1d().iter().chain(standard_2d().iter()) {
            for poly in [f.num(), f.den()] {
                for m in poly.terms() {
                    let c = m.coeff.as_finite().expect("lattice coefficients are finite");
                    assert!((-4.0..=4.0).contains(&c));
                    assert_eq!(c * 8.0, (c * 8.0).round());
                    for &e in &m.expo {
                        assert!((-3.0..=3.0).contains(&e));
                        assert_eq!(e * 4.0, (e * 4.0).round());
                    }
                }
            }
        }
    }

    #[test]
    fn pole_corpus_entries_have_a_finite_pole_floor() {
        let quad = make_quadrature(1, 2, 0).unwrap();
        for f in with_poles_1d() {
            let slices = SliceSet::new(&f, &quad, 64.0);
            assert!(slices.pole_floor().is_some());
        }
    }

    #[test]
    fn every_pair_composes_to_a_nonconstant_polynomial() {
        for (p, f) in hypersurface_pairs_1d()
            .into_iter()
            .chain(hypersurface_pairs_2d())
        {
            let g = compose(&p, &f).unwrap();
            assert!(!g.is_constant());
        }
    }
}
