use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, ToPrimitive};

/// Coefficient field for the cohomology, K-class and bordism modules.
///
/// Exact equality is assumed throughout (zero terms are dropped by
/// comparing with `zero()`), so floating-point instances are only
/// meaningful for computations whose intermediate values are exactly
/// representable.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync {
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

/// Panics if the integer does not fit in an `i64`.
impl Scalar for Rational64 {
    fn from_bigint(n: &BigInt) -> Self {
        Rational64::from_integer(n.to_i64().expect("integer overflows Rational64"))
    }
}

impl Scalar for f64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f32().unwrap_or(f32::NAN)
    }
}
