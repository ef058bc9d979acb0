//! Scalar abstraction shared by the whole crate.
//!
//! All closed forms and recurrences here are rational functions of the
//! state parameters, so the same code runs in `f64` (fast) and in
//! `BigRational` (exact). Transcendental paths (wavefunctions, quadrature,
//! log-gamma) additionally need [`FloatScalar`].

use std::fmt::{Debug, Display};

use num::BigRational;
use num_traits::{Float, FromPrimitive, Signed, ToPrimitive};

/// A field with sign and order: enough for every recurrence and closed
/// form in this crate. Implemented for `f32`, `f64` and [`BigRational`].
pub trait Scalar: Clone + PartialOrd + Signed + Display + Debug {
    /// True when arithmetic is exact (no rounding), as for rationals.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    /// num / den with den != 0. Exact for rationals, one rounding for floats.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Best-effort conversion for reporting. Never panics.
    fn to_f64_lossy(&self) -> f64;

    /// Rationals are always finite; floats may not be.
    fn is_finite_value(&self) -> bool;
}

macro_rules! impl_scalar_float {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_int(v: i64) -> Self {
                v as $t
            }

            fn from_ratio(num: i64, den: i64) -> Self {
                num as $t / den as $t
            }

            fn to_f64_lossy(&self) -> f64 {
                *self as f64
            }

            fn is_finite_value(&self) -> bool {
                self.is_finite()
            }
        }
    };
}

impl_scalar_float!(f32);
impl_scalar_float!(f64);

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(num.into(), den.into())
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn is_finite_value(&self) -> bool {
        true
    }
}

/// Scalars with transcendental operations, i.e. real floating-point types.
pub trait FloatScalar: Scalar + Float + FromPrimitive {
    /// Exact rational value of this float. `None` for NaN/infinities.
    fn to_rational_exact(&self) -> Option<BigRational>;
}

impl FloatScalar for f64 {
    fn to_rational_exact(&self) -> Option<BigRational> {
        BigRational::from_float(*self)
    }
}

impl FloatScalar for f32 {
    fn to_rational_exact(&self) -> Option<BigRational> {
        BigRational::from_float(*self)
    }
}

/// Integer power by repeated multiplication; negative exponents divide.
pub fn int_pow<S: Scalar>(base: &S, exp: i32) -> S {
    let mut acc = S::one();
    for _ in 0..exp.unsigned_abs() {
        acc = acc * base.clone();
    }
    if exp < 0 {
        S::one() / acc
    } else {
        acc
    }
}

/// Rising factorial (x)_m = x (x+1) ... (x+m-1).
pub fn rising_factorial<S: Scalar>(x: &S, m: u32) -> S {
    let mut acc = S::one();
    for i in 0..m {
        acc = acc * (x.clone() + S::from_int(i as i64));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_pow_handles_negative_exponents() {
        assert_eq!(int_pow(&2.0f64, 3), 8.0);
        assert_eq!(int_pow(&2.0f64, -2), 0.25);
        assert_eq!(int_pow(&2.0f64, 0), 1.0);
        let r = int_pow(&BigRational::from_ratio(3, 2), -3);
        assert_eq!(r, BigRational::from_ratio(8, 27));
    }

    #[test]
    fn rising_factorial_matches_products() {
        assert_eq!(rising_factorial(&3.0f64, 4), 3.0 * 4.0 * 5.0 * 6.0);
        assert_eq!(rising_factorial(&0.5f64, 2), 0.75);
        assert_eq!(rising_factorial(&7.0f64, 0), 1.0);
    }

    #[test]
    fn float_to_rational_is_exact() {
        let r = 0.1f64.to_rational_exact().unwrap();
        assert_eq!(r.to_f64().unwrap(), 0.1);
        assert!(f64::NAN.to_rational_exact().is_none());
    }
}
