//! Coefficient types.
//!
//! Algebraic operations (products, conjugation, traces, the Freudenthal
//! determinant) only need field arithmetic and are generic over [`Scalar`],
//! so they run unchanged on `f32`, `f64` or exact rationals. Anything that
//! takes a square root, a trigonometric function or a tolerance needs
//! [`Real`].

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{Float, FloatConst, Num, NumCast};

/// A field of characteristic zero with cheap copies.
///
/// `Num` also admits integer types, whose truncating division breaks the
/// halving in the Jordan product; use `Ratio<i64>` for exact work.
pub trait Scalar: Copy + PartialEq + Debug + Num + Neg<Output = Self> {
    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half(self) -> Self {
        self / Self::two()
    }
}

impl<T> Scalar for T where T: Copy + PartialEq + Debug + Num + Neg<Output = T> {}

/// Floating-point coefficients.
pub trait Real: Scalar + Float + FloatConst + Display + Send + Sync + 'static {
    /// Converts an `f64` literal. Lossy for `f32`.
    fn lit(x: f64) -> Self {
        <Self as NumCast>::from(x).expect("f64 literal representable")
    }

    fn to_f64_lossy(self) -> f64 {
        <f64 as NumCast>::from(self).unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
