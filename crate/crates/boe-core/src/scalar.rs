//! The coefficient ring shared by the exact and floating-point engines.
//!
//! All path/trace/cumulant machinery is generic over [`Coeff`], so the same
//! code runs in exact rational arithmetic (where the identities are exact
//! cancellations) and in `f64` (where tolerances apply). Only ring
//! operations, comparison, and conversion from small rationals are required —
//! in particular no division, so `f64` and `BigRational` are the only
//! implementations needed.

use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Ring of coefficients: exact rationals or IEEE doubles.
pub trait Coeff:
    Clone
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// The value `num/den`. Exact for rationals; correctly rounded for `f64`.
    fn ratio(num: i64, den: i64) -> Self;

    /// Conversion from an arbitrary-precision rational (composition weights
    /// and other exactly computed scalars enter generic code through here).
    fn from_rational(r: &BigRational) -> Self;

    /// Absolute value.
    fn abs(&self) -> Self;

    /// Best-effort conversion to `f64` (used for reports and tolerances).
    fn to_f64(&self) -> f64;
}

impl Coeff for f64 {
    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_rational(r: &BigRational) -> Self {
        ToPrimitive::to_f64(r).expect("rational does not fit in f64")
    }

    fn abs(&self) -> Self {
        libm::fabs(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Coeff for BigRational {
    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).expect("rational does not fit in f64")
    }
}

/// The exact rational `num/den` (convenience constructor used all over the
/// test suites).
pub fn rat(num: i64, den: i64) -> BigRational {
    <BigRational as Coeff>::ratio(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_agrees_between_modes() {
        let q = <BigRational as Coeff>::ratio(-3, 8);
        assert_eq!(Coeff::to_f64(&q), -0.375);
        assert_eq!(<f64 as Coeff>::ratio(-3, 8), -0.375);
    }

    #[test]
    fn rational_roundtrip_through_weights() {
        let w = rat(7, -2); // sign normalizes into the numerator
        assert_eq!(<BigRational as Coeff>::from_rational(&w), rat(-7, 2));
        assert_eq!(<f64 as Coeff>::from_rational(&w), -3.5);
    }
}
