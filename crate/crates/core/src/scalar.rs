use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{Num, ToPrimitive};

use crate::Rational;

/// Coefficient type for polynomials and truncated series.
///
/// Exact work happens over [`Rational`]; `f64` and `f32` instantiations
/// give cheap float images of the same objects.
pub trait Scalar: Num + Clone + Debug + Neg<Output = Self> + Send + Sync + 'static {
    fn from_rational(r: &Rational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(v.into()))
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for f32 {
    fn from_rational(r: &Rational) -> Self {
        r.to_f32().unwrap_or(f32::NAN)
    }

    fn from_i64(v: i64) -> Self {
        v as f32
    }
}
