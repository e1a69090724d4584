//! Scalar types for the weight arithmetic (component weights, the
//! half-integer sums in the barrier inequalities).

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{Num, Signed};

/// A signed ordered field element the weight code can be evaluated in.
///
/// `Ratio<i64>` gives exact answers; `f64`/`f32` are provided for quick
/// estimates and must not be used where a strict inequality is certified.
pub trait Scalar: Num + Signed + Copy + PartialOrd + Debug {
    fn from_int(v: i64) -> Self;

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_int(v: i64) -> Self {
                v as $t
            }
        }
    )*};
}

impl_float_scalar!(f32, f64);

impl Scalar for Ratio<i64> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }
}

impl Scalar for Ratio<i128> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }
}
