//! Minimal commutative ring interface shared by the exact scalar types.

use std::fmt::{Debug, Display};

use crate::scalar::Rational;

/// Commutative ring with exact equality.
///
/// Method names avoid `add`/`mul` so they never clash with `std::ops` in concrete code.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;
    /// Multiplicative inverse when `self` is a unit.
    fn try_inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.plus(other);
    }

    fn scale_i64(&self, k: i64) -> Self {
        match k {
            0 => Self::zero(),
            1 => self.clone(),
            -1 => self.negate(),
            _ => self.times(&Self::from_i64(k)),
        }
    }
}
