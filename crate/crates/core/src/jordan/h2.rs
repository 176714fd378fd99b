use serde::{Deserialize, Serialize};

use crate::octonion::Octonion;
use crate::scalar::{Real, Scalar};

/// 2×2 octonionic Hermitian matrix `[[d1, a], [ā, d2]]`.
///
/// With a preferred unit ℓ this is the momentum vector
/// `[[t+z, x−ℓy], [x+ℓy, t−z]]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HermitianMatrix2<T> {
    pub d1: T,
    pub d2: T,
    pub a: Octonion<T>,
}

impl<T: Scalar> HermitianMatrix2<T> {
    pub fn new(d1: T, d2: T, a: Octonion<T>) -> Self {
        HermitianMatrix2 { d1, d2, a }
    }

    pub fn identity() -> Self {
        HermitianMatrix2::new(T::one(), T::one(), Octonion::zero())
    }

    pub fn zero() -> Self {
        HermitianMatrix2::new(T::zero(), T::zero(), Octonion::zero())
    }

    /// `θθ†`
    pub fn outer(theta: &[Octonion<T>; 2]) -> Self {
        HermitianMatrix2::new(
            theta[0].norm_sq(),
            theta[1].norm_sq(),
            theta[0].mul(&theta[1].conj()),
        )
    }

    pub fn trace(&self) -> T {
        self.d1 + self.d2
    }

    pub fn det(&self) -> T {
        self.d1 * self.d2 - self.a.norm_sq()
    }

    /// `P − tr(P) I`
    pub fn trace_reversed(&self) -> Self {
        let t = self.trace();
        HermitianMatrix2::new(self.d1 - t, self.d2 - t, self.a)
    }

    pub fn mul_vec(&self, v: &[Octonion<T>; 2]) -> [Octonion<T>; 2] {
        [
            v[0].scale(self.d1) + self.a.mul(&v[1]),
            self.a.conj().mul(&v[0]) + v[1].scale(self.d2),
        ]
    }

    pub fn sub(&self, other: &Self) -> Self {
        HermitianMatrix2::new(self.d1 - other.d1, self.d2 - other.d2, self.a - other.a)
    }

    pub fn scale(&self, s: T) -> Self {
        HermitianMatrix2::new(self.d1 * s, self.d2 * s, self.a.scale(s))
    }
}

impl<T: Real> HermitianMatrix2<T> {
    pub fn max_abs(&self) -> T {
        self.d1.abs().max(self.d2.abs()).max(self.a.max_abs())
    }

    /// Spatial momentum `(x, y, z)` relative to the preferred unit ℓ.
    pub fn spatial_momentum(&self) -> (T, T, T) {
        let two = T::two();
        (
            self.a.re(),
            -self.a[crate::octonion::Unit::L.index()],
            (self.d1 - self.d2) / two,
        )
    }
}
