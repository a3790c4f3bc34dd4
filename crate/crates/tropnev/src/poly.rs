//! Tropical polynomials and rational functions on `R^n`.
//!
//! A [`TropicalPolynomial`] is a finite list of monomials `(c, m)` with
//! finite coefficient `c` and real exponent vector `m`; its value is
//! `max_i (c_i + <m_i, x>)`, a convex piecewise-linear function. A
//! [`TropicalRational`] is a numerator/denominator pair evaluated as the
//! difference of the two maxima. Entire functions are rationals whose
//! denominator is the multiplicative identity (single term, coefficient 0,
//! zero exponents).
//!
//! Construction canonicalizes: bottom-coefficient terms are dropped
//! (idempotent addition makes them redundant), exact duplicate exponent
//! vectors are merged keeping the maximal coefficient, negative zeros are
//! normalized, and terms are sorted by exponent vector. Two polynomials
//! built from the same term multiset therefore compare equal componentwise.
//!
//! Arithmetic is exact on coefficients: `t_add`/`t_mul`/`t_div` assemble
//! term lists (Minkowski products for multiplication), [`shift`] rewrites
//! `(c, m)` to `(c + <m, delta>, m)`, and [`q_scale`] rewrites it to
//! `(c, q*m)`, so the transformed function evaluates bit-for-bit like the
//! composed one up to floating-point rounding of the same sums.
//!
//! [`shift`]: TropicalRational::shift
//! [`q_scale`]: TropicalRational::q_scale

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::semiring::TropicalNumber;

/// Errors for piecewise-linear function construction and evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PlfunError {
    /// Polynomials must keep at least one finite-coefficient term.
    #[error("polynomial has no finite-coefficient term")]
    EmptyPolynomial,
    /// Ambient dimensions of the operands disagree.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    /// Exponent vectors must consist of finite reals.
    #[error("exponent vectors must be finite reals")]
    NonFiniteExponent,
    /// Coordinates of evaluation points must be finite reals.
    #[error("evaluation point must have finite coordinates")]
    NonFinitePoint,
    /// Multiplicative rescaling `x -> qx` requires `q != 0`.
    #[error("q_scale requires a nonzero scale factor")]
    ZeroQ,
    /// The ambient dimension must be at least 1.
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    /// A black-box breakpoint search exceeded its evaluation budget.
    #[error("breakpoint search exceeded its budget of {max_evals} evaluations")]
    BudgetExceeded { max_evals: usize },
}

/// One affine term `c + <m, x>` of a tropical polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    /// Tropical coefficient (the intercept).
    pub coeff: TropicalNumber,
    /// Real exponent vector (the gradient); length equals the ambient
    /// dimension.
    pub expo: Vec<f64>,
}

impl Monomial {
    pub fn new(coeff: TropicalNumber, expo: Vec<f64>) -> Self {
        Monomial { coeff, expo }
    }
}

fn normalize_zero(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

/// A finite maximum of affine terms; convex and finite everywhere.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalPolynomial {
    dim: usize,
    terms: Vec<Monomial>,
}

impl TropicalPolynomial {
    /// Builds a polynomial from a term list.
    ///
    /// Bottom-coefficient terms are dropped; duplicate exponent vectors are
    /// merged keeping the larger coefficient; terms are sorted by exponent
    /// vector. At least one finite term must remain.
    pub fn new(dim: usize, terms: Vec<Monomial>) -> Result<Self, PlfunError> {
        if dim == 0 {
            return Err(PlfunError::ZeroDimension);
        }
        let mut kept: Vec<Monomial> = Vec::with_capacity(terms.len());
        for t in terms {
            let Some(c) = t.coeff.as_finite() else {
                continue;
            };
            if t.expo.len() != dim {
                return Err(PlfunError::DimMismatch {
                    expected: dim,
                    got: t.expo.len(),
                });
            }
            if t.expo.iter().any(|e| !e.is_finite()) {
                return Err(PlfunError::NonFiniteExponent);
            }
            kept.push(Monomial {
                coeff: TropicalNumber::from_finite(normalize_zero(c)),
                expo: t.expo.into_iter().map(normalize_zero).collect(),
            });
        }
        if kept.is_empty() {
            return Err(PlfunError::EmptyPolynomial);
        }
        kept.sort_by(|a, b| {
            let by_expo = a
                .expo
                .iter()
                .zip(&b.expo)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal);
            by_expo.then_with(|| a.coeff.cmp(&b.coeff))
        });
        kept.dedup_by(|next, prev| {
            if next.expo == prev.expo {
                // Sorted ascending by coefficient within equal exponents.
                prev.coeff = prev.coeff.max(next.coeff);
                true
            } else {
                false
            }
        });
        Ok(TropicalPolynomial { dim, terms: kept })
    }

    /// The constant polynomial `c`.
    pub fn constant(dim: usize, c: f64) -> Self {
        TropicalPolynomial::new(
            dim,
            vec![Monomial::new(TropicalNumber::from_finite(c), vec![0.0; dim])],
        )
        .expect("constant polynomial is well-formed")
    }

    /// The multiplicative identity (constant 0).
    pub fn one(dim: usize) -> Self {
        TropicalPolynomial::constant(dim, 0.0)
    }

    /// A single-term polynomial `c + <m, x>`.
    pub fn affine(dim: usize, c: f64, expo: Vec<f64>) -> Result<Self, PlfunError> {
        TropicalPolynomial::new(dim, vec![Monomial::new(TropicalNumber::from_finite(c), expo)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    /// Whether the polynomial is a single constant term.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].expo.iter().all(|&e| e == 0.0)
    }

    fn check_point(&self, x: &[f64]) -> Result<(), PlfunError> {
        if x.len() != self.dim {
            return Err(PlfunError::DimMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(PlfunError::NonFinitePoint);
        }
        Ok(())
    }

    pub(crate) fn value_unchecked(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.dim);
        let mut best = f64::NEG_INFINITY;
        for t in &self.terms {
            let mut v = t.coeff.value();
            for (m, xi) in t.expo.iter().zip(x) {
                v += m * xi;
            }
            if v > best {
                best = v;
            }
        }
        best
    }

    /// `max_i (c_i + <m_i, x>)`; finite by the construction invariant.
    pub fn eval(&self, x: &[f64]) -> Result<TropicalNumber, PlfunError> {
        self.check_point(x)?;
        Ok(TropicalNumber::from_finite(self.value_unchecked(x)))
    }

    /// Panicking convenience for [`eval`].
    ///
    /// [`eval`]: TropicalPolynomial::eval
    pub fn value(&self, x: &[f64]) -> f64 {
        self.eval(x).expect("polynomial evaluation").value()
    }

    fn check_same_dim(&self, other: &TropicalPolynomial) -> Result<(), PlfunError> {
        if self.dim != other.dim {
            return Err(PlfunError::DimMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }

    /// Pointwise maximum: the union of the term lists.
    pub fn t_add(&self, other: &TropicalPolynomial) -> Result<Self, PlfunError> {
        self.check_same_dim(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        TropicalPolynomial::new(self.dim, terms)
    }

    /// Pointwise sum: the Minkowski product of the term lists.
    pub fn t_mul(&self, other: &TropicalPolynomial) -> Result<Self, PlfunError> {
        self.check_same_dim(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let expo = a.expo.iter().zip(&b.expo).map(|(x, y)| x + y).collect();
                terms.push(Monomial::new(
                    TropicalNumber::from_finite(a.coeff.value() + b.coeff.value()),
                    expo,
                ));
            }
        }
        TropicalPolynomial::new(self.dim, terms)
    }

    /// Pointwise scaling `a * P` for `a >= 0`, i.e. the tropical power
    /// `P^(a)`; each term `(c, m)` becomes `(a*c, a*m)`.
    ///
    /// Per-term scaling equals scaling of the maximum only for nonnegative
    /// `a`, so negative factors panic; rational functions handle negative
    /// powers through [`TropicalRational::t_pow`].
    pub fn scale(&self, a: f64) -> Self {
        assert!(a.is_finite() && a >= 0.0, "scale factor must be >= 0, got {a}");
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Monomial::new(
                    TropicalNumber::from_finite(a * t.coeff.value()),
                    t.expo.iter().map(|m| a * m).collect(),
                )
            })
            .collect();
        TropicalPolynomial::new(self.dim, terms).expect("scaling preserves well-formedness")
    }

    /// Exact shift `P(. + delta)`: each term `(c, m)` becomes
    /// `(c + <m, delta>, m)`.
    pub fn shift(&self, delta: &[f64]) -> Result<Self, PlfunError> {
        if delta.len() != self.dim {
            return Err(PlfunError::DimMismatch {
                expected: self.dim,
                got: delta.len(),
            });
        }
        if delta.iter().any(|v| !v.is_finite()) {
            return Err(PlfunError::NonFinitePoint);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let dot: f64 = t.expo.iter().zip(delta).map(|(m, d)| m * d).sum();
                Monomial::new(
                    TropicalNumber::from_finite(t.coeff.value() + dot),
                    t.expo.clone(),
                )
            })
            .collect();
        TropicalPolynomial::new(self.dim, terms)
    }

    /// Exact argument rescaling `P(q .)`: each term `(c, m)` becomes
    /// `(c, q*m)`.
    pub fn q_scale(&self, q: f64) -> Result<Self, PlfunError> {
        if q == 0.0 || !q.is_finite() {
            return Err(PlfunError::ZeroQ);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Monomial::new(t.coeff, t.expo.iter().map(|m| q * m).collect()))
            .collect();
        TropicalPolynomial::new(self.dim, terms)
    }
}

impl fmt::Display for TropicalPolynomial {
    /// Renders in the one-line grammar `term (| term)*` with each term as
    /// `coeff[:e1,e2,...]`, zero exponent vectors omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{}", t.coeff)?;
            if t.expo.iter().any(|&e| e != 0.0) {
                write!(f, ":")?;
                for (j, e) in t.expo.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// A difference of two tropical polynomials, `f = num - den`; the
/// piecewise-linear analogue of a meromorphic function.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalRational {
    num: TropicalPolynomial,
    den: TropicalPolynomial,
}

impl TropicalRational {
    pub fn new(
        num: TropicalPolynomial,
        den: TropicalPolynomial,
    ) -> Result<Self, PlfunError> {
        num.check_same_dim(&den)?;
        Ok(TropicalRational { num, den })
    }

    /// An entire function: denominator is the multiplicative identity.
    pub fn entire(num: TropicalPolynomial) -> Self {
        let den = TropicalPolynomial::one(num.dim());
        TropicalRational { num, den }
    }

    /// The constant function `c`.
    pub fn constant(dim: usize, c: f64) -> Self {
        TropicalRational::entire(TropicalPolynomial::constant(dim, c))
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn num(&self) -> &TropicalPolynomial {
        &self.num
    }

    pub fn den(&self) -> &TropicalPolynomial {
        &self.den
    }

    /// Whether the denominator is exactly the multiplicative identity.
    pub fn is_entire(&self) -> bool {
        self.den == TropicalPolynomial::one(self.dim())
    }

    pub(crate) fn value_unchecked(&self, x: &[f64]) -> f64 {
        self.num.value_unchecked(x) - self.den.value_unchecked(x)
    }

    /// `num(x) - den(x)`; finite for finite `x`.
    pub fn eval(&self, x: &[f64]) -> Result<f64, PlfunError> {
        self.num.check_point(x)?;
        Ok(self.value_unchecked(x))
    }

    /// Panicking convenience for [`eval`].
    ///
    /// [`eval`]: TropicalRational::eval
    pub fn value(&self, x: &[f64]) -> f64 {
        self.eval(x).expect("rational evaluation")
    }

    /// The reciprocal `1 (/) f`, swapping numerator and denominator.
    pub fn recip(&self) -> Self {
        TropicalRational {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    /// Pointwise maximum of two rationals, put over a common denominator.
    pub fn t_add(&self, other: &TropicalRational) -> Result<Self, PlfunError> {
        let num = self
            .num
            .t_mul(&other.den)?
            .t_add(&other.num.t_mul(&self.den)?)?;
        let den = self.den.t_mul(&other.den)?;
        TropicalRational::new(num, den)
    }

    /// Pointwise sum `f + g`.
    pub fn t_mul(&self, other: &TropicalRational) -> Result<Self, PlfunError> {
        TropicalRational::new(self.num.t_mul(&other.num)?, self.den.t_mul(&other.den)?)
    }

    /// Pointwise difference `f - g`.
    pub fn t_div(&self, other: &TropicalRational) -> Result<Self, PlfunError> {
        TropicalRational::new(self.num.t_mul(&other.den)?, self.den.t_mul(&other.num)?)
    }

    /// `f (+) a = max(f, a)` for a scalar `a`; bottom leaves `f` unchanged.
    pub fn plus_const(&self, a: TropicalNumber) -> Self {
        let Some(a) = a.as_finite() else {
            return self.clone();
        };
        let scaled_den = self
            .den
            .terms
            .iter()
            .map(|t| {
                Monomial::new(
                    TropicalNumber::from_finite(t.coeff.value() + a),
                    t.expo.clone(),
                )
            })
            .collect::<Vec<_>>();
        let mut terms = self.num.terms.clone();
        terms.extend(scaled_den);
        let num = TropicalPolynomial::new(self.dim(), terms)
            .expect("augmented numerator is well-formed");
        TropicalRational {
            num,
            den: self.den.clone(),
        }
    }

    /// Tropical power `f^(alpha) = alpha * f` for any real `alpha`.
    ///
    /// `alpha = 0` yields the constant 0; negative powers go through the
    /// reciprocal.
    pub fn t_pow(&self, alpha: f64) -> Self {
        assert!(alpha.is_finite(), "t_pow exponent must be finite, got {alpha}");
        if alpha == 0.0 {
            return TropicalRational::constant(self.dim(), 0.0);
        }
        if alpha < 0.0 {
            return self.recip().t_pow(-alpha);
        }
        TropicalRational {
            num: self.num.scale(alpha),
            den: self.den.scale(alpha),
        }
    }

    /// Exact shift `f(. + delta)` of both numerator and denominator.
    pub fn shift(&self, delta: &[f64]) -> Result<Self, PlfunError> {
        Ok(TropicalRational {
            num: self.num.shift(delta)?,
            den: self.den.shift(delta)?,
        })
    }

    /// Exact argument rescaling `f(q .)`.
    pub fn q_scale(&self, q: f64) -> Result<Self, PlfunError> {
        Ok(TropicalRational {
            num: self.num.q_scale(q)?,
            den: self.den.q_scale(q)?,
        })
    }
}

impl fmt::Display for TropicalRational {
    /// Renders in the one-line grammar `poly [/ poly]`, denominator omitted
    /// for entire functions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_entire() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", self.num, self.den)
        }
    }
}

// --- JSON wire format ---------------------------------------------------
//
// A term is {"c": number|"-inf", "m": [reals]}; a polynomial is a term
// array; a rational is {"dim": n, "num": [...], "den": [...]} with "den"
// omitted for entire functions.

#[derive(Serialize, Deserialize)]
struct TermDoc {
    c: TropicalNumber,
    m: Vec<f64>,
}

impl Serialize for TropicalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let docs: Vec<TermDoc> = self
            .terms
            .iter()
            .map(|t| TermDoc {
                c: t.coeff,
                m: t.expo.clone(),
            })
            .collect();
        docs.serialize(serializer)
    }
}

impl TropicalPolynomial {
    fn from_docs(dim: usize, docs: Vec<TermDoc>) -> Result<Self, PlfunError> {
        let terms = docs
            .into_iter()
            .map(|d| Monomial::new(d.c, d.m))
            .collect();
        TropicalPolynomial::new(dim, terms)
    }
}

impl<'de> Deserialize<'de> for TropicalPolynomial {
    /// Deserializes a bare term array; the dimension is inferred from the
    /// first term's exponent vector.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let docs = Vec::<TermDoc>::deserialize(deserializer)?;
        let dim = docs
            .first()
            .map(|d| d.m.len())
            .ok_or_else(|| D::Error::custom("polynomial term array is empty"))?;
        TropicalPolynomial::from_docs(dim, docs).map_err(D::Error::custom)
    }
}

#[derive(Serialize)]
struct RationalDocOut<'a> {
    dim: usize,
    num: &'a TropicalPolynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    den: Option<&'a TropicalPolynomial>,
}

#[derive(Deserialize)]
struct RationalDocIn {
    dim: usize,
    num: Vec<TermDoc>,
    #[serde(default)]
    den: Option<Vec<TermDoc>>,
}

impl Serialize for TropicalRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RationalDocOut {
            dim: self.dim(),
            num: &self.num,
            den: if self.is_entire() { None } else { Some(&self.den) },
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TropicalRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = RationalDocIn::deserialize(deserializer)?;
        let num = TropicalPolynomial::from_docs(doc.dim, doc.num).map_err(D::Error::custom)?;
        let den = match doc.den {
            Some(docs) => TropicalPolynomial::from_docs(doc.dim, docs).map_err(D::Error::custom)?,
            None => TropicalPolynomial::one(doc.dim),
        };
        TropicalRational::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: f64) -> TropicalNumber {
        TropicalNumber::from_finite(v)
    }

    /// The running 1-D example `(x (+) 0) (/) (x (+) 1)`.
    pub fn two_term_quotient() -> TropicalRational {
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

    #[test]
    fn construction_canonicalizes_terms() {
        let p = TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(t(1.0), vec![2.0]),
                Monomial::new(TropicalNumber::BOTTOM, vec![5.0]),
                Monomial::new(t(3.0), vec![2.0]),
                Monomial::new(t(0.0), vec![0.0]),
            ],
        )
        .unwrap();
        // Bottom term dropped, duplicate exponent merged keeping coeff 3.
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.terms()[0].expo, vec![0.0]);
        assert_eq!(p.terms()[1].coeff, t(3.0));

        let empty = TropicalPolynomial::new(
            1,
            vec![Monomial::new(TropicalNumber::BOTTOM, vec![1.0])],
        );
        assert_eq!(empty, Err(PlfunError::EmptyPolynomial));
    }

    #[test]
    fn eval_matches_hand_computations() {
        // max(0, x) at x = -2.
        let p = TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(t(0.0), vec![0.0]),
                Monomial::new(t(0.0), vec![1.0]),
            ],
        )
        .unwrap();
        assert_eq!(p.value(&[-2.0]), 0.0);

        // max(x, -x) = |x| at x = 3.
        let abs = TropicalPolynomial::new(
            1,
            vec![
                Monomial::new(t(0.0), vec![1.0]),
                Monomial::new(t(0.0), vec![-1.0]),
            ],
        )
        .unwrap();
        assert_eq!(abs.value(&[3.0]), 3.0);

        // Single term 1 + 2*x1 + 0.5*x2 at (1, 2).
        let single = TropicalPolynomial::affine(2, 1.0, vec![2.0, 0.5]).unwrap();
        assert_eq!(single.value(&[1.0, 2.0]), 4.0);
    }

    #[test]
    fn rational_eval_matches_the_piecewise_form() {
        let f = two_term_quotient();
        // Piecewise: -1 for x <= 0, x - 1 on (0, 1], 0 for x > 1.
        assert_eq!(f.value(&[0.5]), -0.5);
        assert_eq!(f.value(&[-3.0]), -1.0);
        assert_eq!(f.value(&[2.0]), 0.0);

        let abs_diff = TropicalRational::new(
            TropicalPolynomial::new(
                2,
                vec![
                    Monomial::new(t(0.0), vec![1.0, 0.0]),
                    Monomial::new(t(0.0), vec![-1.0, 0.0]),
                ],
            )
            .unwrap(),
            TropicalPolynomial::new(
                2,
                vec![
                    Monomial::new(t(0.0), vec![0.0, 1.0]),
                    Monomial::new(t(0.0), vec![0.0, -1.0]),
                ],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(abs_diff.value(&[2.0, 5.0]), -3.0);
    }

    #[test]
    fn dim_mismatch_is_reported() {
        let p = TropicalPolynomial::one(2);
        assert_eq!(
            p.eval(&[1.0]),
            Err(PlfunError::DimMismatch { expected: 2, got: 1 })
        );
        let q = TropicalPolynomial::one(3);
        assert_eq!(
            p.t_add(&q),
            Err(PlfunError::DimMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn shift_is_an_exact_coefficient_transform() {
        let f = two_term_quotient();
        let g = f.shift(&[1.0]).unwrap();
        // ((1 (*) x) (+) 0) (/) ((1 (*) x) (+) 1).
        assert_eq!(g.num().terms()[1].coeff, t(1.0));
        assert_eq!(g.den().terms()[1].coeff, t(1.0));
        for i in -50..50 {
            let x = i as f64 * 0.37;
            assert_eq!(g.value(&[x]), f.value(&[x + 1.0]));
        }
        assert_eq!(f.shift(&[0.0]).unwrap(), f);
    }

    #[test]
    fn q_scale_is_an_exact_exponent_transform() {
        let x = TropicalPolynomial::affine(1, 0.0, vec![1.0]).unwrap();
        let f = TropicalRational::entire(x);
        let g = f.q_scale(2.0).unwrap();
        assert_eq!(g.value(&[3.0]), 6.0);
        assert_eq!(f.q_scale(1.0).unwrap(), f);
        assert_eq!(f.q_scale(0.0), Err(PlfunError::ZeroQ));

        let h = two_term_quotient();
        let hm = h.q_scale(-1.0).unwrap();
        for i in -50..50 {
            let x = i as f64 * 0.73;
            assert_eq!(hm.value(&[x]), h.value(&[-x]));
        }
    }

    #[test]
    fn arithmetic_matches_pointwise_operations() {
        let f = two_term_quotient();
        let g = f.shift(&[0.5]).unwrap();
        let sum = f.t_mul(&g).unwrap();
        let max = f.t_add(&g).unwrap();
        let diff = f.t_div(&g).unwrap();
        let aug = f.plus_const(t(-0.25));
        let pow = f.t_pow(2.5);
        let neg = f.t_pow(-1.0);
        for i in -40..=40 {
            let x = [i as f64 * 0.31];
            let (fv, gv) = (f.value(&x), g.value(&x));
            assert!((sum.value(&x) - (fv + gv)).abs() < 1e-12);
            assert!((max.value(&x) - fv.max(gv)).abs() < 1e-12);
            assert!((diff.value(&x) - (fv - gv)).abs() < 1e-12);
            assert!((aug.value(&x) - fv.max(-0.25)).abs() < 1e-12);
            assert!((pow.value(&x) - 2.5 * fv).abs() < 1e-12);
            assert!((neg.value(&x) + fv).abs() < 1e-12);
        }
        assert_eq!(f.t_pow(0.0).value(&[7.0]), 0.0);
    }

    #[test]
    fn entire_functions_round_trip_without_a_denominator() {
        let p = TropicalPolynomial::new(
            2,
            vec![
                Monomial::new(t(1.5), vec![2.0, 0.5]),
                Monomial::new(t(0.0), vec![0.0, 0.0]),
            ],
        )
        .unwrap();
        let f = TropicalRational::entire(p);
        assert!(f.is_entire());
        let json = serde_json::to_string(&f).unwrap();
        assert!(!json.contains("den"));
        let back: TropicalRational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);

        let g = two_term_quotient();
        assert!(!g.is_entire());
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.contains("den"));
        let back: TropicalRational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_accepts_minus_inf_coefficients() {
        let json = r#"{"dim":1,"num":[{"c":"-inf","m":[1.0]},{"c":0.0,"m":[0.0]}]}"#;
        let f: TropicalRational = serde_json::from_str(json).unwrap();
        // The bottom term is dropped at construction.
        assert_eq!(f.num().terms().len(), 1);
        assert!(f.is_entire());

        let all_bottom = r#"{"dim":1,"num":[{"c":"-inf","m":[1.0]}]}"#;
        assert!(serde_json::from_str::<TropicalRational>(all_bottom).is_err());
    }

    #[test]
    fn display_uses_the_expression_grammar() {
        let f = two_term_quotient();
        assert_eq!(f.to_string(), "0 | 0:1 / 1 | 0:1");
        let c = TropicalRational::constant(1, -2.0);
        assert_eq!(c.to_string(), "-2");
    }
}
