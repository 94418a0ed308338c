//! Weight algebras for weighted transducers.
//!
//! A semiring `(K, ⊕, ⊗, 0̄, 1̄)` fixes how parallel paths combine (`plus`)
//! and how weights accumulate along a path (`times`). Two instances are
//! provided:
//!
//! - [`RealWeight`]: `(ℝ, +, ×, 0, 1)` — probabilities and expected counts.
//! - [`TropicalWeight`]: `(ℝ ∪ {+∞}, min, +, +∞, 0)` — best-path search.

use std::fmt;

/// A semiring `(K, ⊕, ⊗, 0̄, 1̄)`.
///
/// Required laws: `plus` is associative and commutative with identity
/// `zero`; `times` is associative with identity `one`; `zero` annihilates
/// `times`; `times` distributes over `plus`.
pub trait Semiring: Copy + Clone + fmt::Debug + fmt::Display + PartialEq + Send + Sync + 'static {
    /// Additive identity 0̄.
    fn zero() -> Self;
    /// Multiplicative identity 1̄.
    fn one() -> Self;
    /// Semiring addition ⊕: combines parallel paths.
    fn plus(&self, other: &Self) -> Self;
    /// Semiring multiplication ⊗: sequences path segments.
    fn times(&self, other: &Self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Raw numeric value, used by the text serialization.
    fn value(&self) -> f64;

    /// Build a weight from its raw numeric value.
    fn from_value(v: f64) -> Self;

    /// Approximate equality for floating-point comparisons.
    fn approx_eq(&self, other: &Self, epsilon: f64) -> bool {
        (self.value() - other.value()).abs() <= epsilon
    }
}

/// Real (probability) semiring: `(ℝ, +, ×, 0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct RealWeight(pub f64);

impl RealWeight {
    pub const fn new(value: f64) -> Self {
        RealWeight(value)
    }
}

impl Semiring for RealWeight {
    fn zero() -> Self {
        RealWeight(0.0)
    }

    fn one() -> Self {
        RealWeight(1.0)
    }

    fn plus(&self, other: &Self) -> Self {
        RealWeight(self.0 + other.0)
    }

    fn times(&self, other: &Self) -> Self {
        RealWeight(self.0 * other.0)
    }

    fn value(&self) -> f64 {
        self.0
    }

    fn from_value(v: f64) -> Self {
        RealWeight(v)
    }
}

impl fmt::Display for RealWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Tropical semiring: `(ℝ ∪ {+∞}, min, +, +∞, 0)`.
///
/// Lower is better; `plus` keeps the best alternative and `times` adds
/// costs along a path.
#[derive(Clone, Copy, Debug)]
pub struct TropicalWeight(pub f64);

impl TropicalWeight {
    pub const fn new(value: f64) -> Self {
        TropicalWeight(value)
    }

    pub const fn infinity() -> Self {
        TropicalWeight(f64::INFINITY)
    }
}

impl Semiring for TropicalWeight {
    fn zero() -> Self {
        TropicalWeight(f64::INFINITY)
    }

    fn one() -> Self {
        TropicalWeight(0.0)
    }

    fn plus(&self, other: &Self) -> Self {
        TropicalWeight(self.0.min(other.0))
    }

    fn times(&self, other: &Self) -> Self {
        TropicalWeight(self.0 + other.0)
    }

    fn is_zero(&self) -> bool {
        self.0.is_infinite() && self.0.is_sign_positive()
    }

    fn value(&self) -> f64 {
        self.0
    }

    fn from_value(v: f64) -> Self {
        TropicalWeight(v)
    }

    fn approx_eq(&self, other: &Self, epsilon: f64) -> bool {
        if self.is_zero() || other.is_zero() {
            self.is_zero() && other.is_zero()
        } else {
            (self.0 - other.0).abs() <= epsilon
        }
    }
}

impl PartialEq for TropicalWeight {
    fn eq(&self, other: &Self) -> bool {
        self.0.total_cmp(&other.0) == std::cmp::Ordering::Equal
    }
}

impl Eq for TropicalWeight {}

impl PartialOrd for TropicalWeight {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropicalWeight {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for TropicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laws<W: Semiring>(a: W, b: W, c: W) {
        let zero = W::zero();
        let one = W::one();
        assert_eq!(a.plus(&b), b.plus(&a));
        assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
        assert_eq!(zero.plus(&a), a);
        assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        assert_eq!(one.times(&a), a);
        assert_eq!(a.times(&one), a);
        assert!(zero.times(&a).is_zero());
        assert!(a.times(&zero).is_zero());
        // distributivity
        assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
    }

    #[test]
    fn real_semiring_laws() {
        laws(RealWeight(0.5), RealWeight(0.25), RealWeight(2.0));
        assert_eq!(RealWeight(0.5).plus(&RealWeight(0.25)), RealWeight(0.75));
        assert_eq!(RealWeight(0.5).times(&RealWeight(0.2)), RealWeight(0.1));
    }

    #[test]
    fn tropical_semiring_laws() {
        laws(
            TropicalWeight(3.0),
            TropicalWeight(1.0),
            TropicalWeight(7.0),
        );
        assert_eq!(
            TropicalWeight(3.0).plus(&TropicalWeight(1.0)),
            TropicalWeight(1.0)
        );
        assert_eq!(
            TropicalWeight(3.0).times(&TropicalWeight(1.0)),
            TropicalWeight(4.0)
        );
        assert!(TropicalWeight::zero().is_zero());
        assert!(TropicalWeight::infinity().is_zero());
    }

    #[test]
    fn tropical_plus_is_idempotent() {
        let w = TropicalWeight(5.0);
        assert_eq!(w.plus(&w), w);
    }
}
