//! Scalar arithmetic of the max-plus semiring.
//!
//! The carrier is `T = R ∪ {-inf}`. Semiring addition is the maximum and
//! semiring multiplication is ordinary addition of reals:
//!
//! ```text
//! x (+) y = max(x, y)        additive identity:      -inf
//! x (*) y = x + y            multiplicative identity: 0
//! ```
//!
//! Addition is idempotent and has no inverse; multiplication is invertible
//! away from the bottom element, with `x (/) y = x - y`. Powers extend to
//! arbitrary real exponents, `x^(a) = a * x`, which is what makes rational
//! exponent tricks from classical value distribution work verbatim here.
//!
//! [`TropicalNumber`] wraps an `f64` whose only non-finite value is
//! `f64::NEG_INFINITY` (the bottom element). `NaN` and `+inf` are rejected at
//! construction, so comparison is total and `Ord` is implemented.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Errors for scalar and matrix max-plus operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MaxPlusError {
    /// Division `x (/) y` requires `y != -inf`.
    #[error("division by the bottom element -inf is undefined")]
    BottomDivisor,
    /// `(-inf)^(a)` with `a < 0` would be `+inf`, which is outside the carrier.
    #[error("negative power of the bottom element -inf is undefined")]
    NegativePowerOfBottom,
    /// `NaN` and `+inf` are not elements of `R ∪ {-inf}`.
    #[error("{0} is not in the max-plus carrier R ∪ {{-inf}}")]
    NotACarrierValue(f64),
    /// The operation requires a square matrix.
    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },
    /// The entry buffer does not match the declared matrix shape.
    #[error("expected {expected} entries for the declared shape, got {got}")]
    EntryCountMismatch { expected: usize, got: usize },
    /// Index sets for a dependence split must be disjoint, nonempty, and
    /// cover every function index, with coefficients not all bottom.
    #[error("invalid dependence split: {0}")]
    BadPartition(String),
}

/// An element of `R ∪ {-inf}` with max-plus semantics.
///
/// The inner value is either finite or `f64::NEG_INFINITY`; this invariant is
/// established at construction and preserved by every operation in this
/// module, so equality and ordering are total.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TropicalNumber(f64);

impl TropicalNumber {
    /// The additive identity `-inf` (annihilates multiplication).
    pub const BOTTOM: TropicalNumber = TropicalNumber(f64::NEG_INFINITY);
    /// The multiplicative identity `0`.
    pub const ONE: TropicalNumber = TropicalNumber(0.0);

    /// Wraps a value, rejecting `NaN` and `+inf`.
    pub fn new(v: f64) -> Result<Self, MaxPlusError> {
        if v.is_nan() || v == f64::INFINITY {
            Err(MaxPlusError::NotACarrierValue(v))
        } else {
            Ok(TropicalNumber(v))
        }
    }

    /// Wraps a finite value.
    ///
    /// # Panics
    ///
    /// Panics if `v` is not finite. Intended for literals; use [`new`] for
    /// data from outside.
    ///
    /// [`new`]: TropicalNumber::new
    pub fn from_finite(v: f64) -> Self {
        assert!(v.is_finite(), "from_finite({v}) requires a finite value");
        TropicalNumber(v)
    }

    /// Whether this is the bottom element `-inf`.
    pub fn is_bottom(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    /// The underlying value; `-inf` for the bottom element.
    pub fn value(self) -> f64 {
        self.0
    }

    /// The underlying value when finite, `None` for the bottom element.
    pub fn as_finite(self) -> Option<f64> {
        if self.is_bottom() {
            None
        } else {
            Some(self.0)
        }
    }
}

impl Eq for TropicalNumber {}

impl PartialOrd for TropicalNumber {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropicalNumber {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // The carrier excludes NaN, so total_cmp agrees with the numeric order.
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for TropicalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bottom() {
            write!(f, "-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for TropicalNumber {
    type Err = MaxPlusError;

    fn from_str(s: &str) -> Result<Self, MaxPlusError> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("-inf") || s.eq_ignore_ascii_case("-infinity") {
            return Ok(TropicalNumber::BOTTOM);
        }
        let v: f64 = s
            .parse()
            .map_err(|_| MaxPlusError::NotACarrierValue(f64::NAN))?;
        TropicalNumber::new(v)
    }
}

impl Serialize for TropicalNumber {
    /// Finite values serialize as JSON numbers, the bottom element as the
    /// string `"-inf"` (JSON has no infinity literal).
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.is_bottom() {
            serializer.serialize_str("-inf")
        } else {
            serializer.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for TropicalNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(v) => TropicalNumber::new(v).map_err(D::Error::custom),
            Raw::Str(s) => s.parse().map_err(D::Error::custom),
        }
    }
}

/// Max-plus addition `x (+) y = max(x, y)`.
pub fn t_add(a: TropicalNumber, b: TropicalNumber) -> TropicalNumber {
    if a >= b {
        a
    } else {
        b
    }
}

/// Max-plus multiplication `x (*) y = x + y`; bottom annihilates.
pub fn t_mul(a: TropicalNumber, b: TropicalNumber) -> TropicalNumber {
    if a.is_bottom() || b.is_bottom() {
        TropicalNumber::BOTTOM
    } else {
        TropicalNumber(a.0 + b.0)
    }
}

/// Max-plus division `x (/) y = x - y`; the divisor must not be bottom.
pub fn t_div(a: TropicalNumber, b: TropicalNumber) -> Result<TropicalNumber, MaxPlusError> {
    if b.is_bottom() {
        return Err(MaxPlusError::BottomDivisor);
    }
    if a.is_bottom() {
        return Ok(TropicalNumber::BOTTOM);
    }
    Ok(TropicalNumber(a.0 - b.0))
}

/// Max-plus power `x^(a) = a * x` for a real exponent `a`.
///
/// `x^(0) = 0` (the multiplicative identity) for every `x`, including
/// bottom. Bottom to a positive power stays bottom; a negative power of
/// bottom is undefined.
///
/// # Panics
///
/// Panics if the exponent is not finite.
pub fn t_pow(x: TropicalNumber, a: f64) -> Result<TropicalNumber, MaxPlusError> {
    assert!(a.is_finite(), "t_pow exponent must be finite, got {a}");
    if a == 0.0 {
        return Ok(TropicalNumber::ONE);
    }
    if x.is_bottom() {
        if a > 0.0 {
            return Ok(TropicalNumber::BOTTOM);
        }
        return Err(MaxPlusError::NegativePowerOfBottom);
    }
    Ok(TropicalNumber(a * x.0))
}
