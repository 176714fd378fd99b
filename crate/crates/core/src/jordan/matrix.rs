use crate::error::{Error, Result};
use crate::jordan::HermitianMatrix3;
use crate::octonion::Octonion;
use crate::scalar::{Real, Scalar};

/// General 3×3 matrix with octonion entries, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctonionMatrix3<T> {
    pub entries: [[Octonion<T>; 3]; 3],
}

impl<T: Scalar> OctonionMatrix3<T> {
    pub fn new(entries: [[Octonion<T>; 3]; 3]) -> Self {
        OctonionMatrix3 { entries }
    }

    pub fn identity() -> Self {
        Self::diagonal([Octonion::one(); 3])
    }

    pub fn diagonal(d: [Octonion<T>; 3]) -> Self {
        let z = Octonion::zero();
        OctonionMatrix3::new([[d[0], z, z], [z, d[1], z], [z, z, d[2]]])
    }

    pub fn from_hermitian(h: &HermitianMatrix3<T>) -> Self {
        let mut e = [[Octonion::zero(); 3]; 3];
        for (r, row) in e.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = h.entry(r, c);
            }
        }
        OctonionMatrix3::new(e)
    }

    pub fn conj_transpose(&self) -> Self {
        let mut e = [[Octonion::zero(); 3]; 3];
        for (r, row) in e.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = self.entries[c][r].conj();
            }
        }
        OctonionMatrix3::new(e)
    }

    /// Row-by-column product; each entry is a sum of two-factor products,
    /// so no association choice is involved.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut e = [[Octonion::zero(); 3]; 3];
        for (r, row) in e.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                for k in 0..3 {
                    *x += self.entries[r][k].mul(&rhs.entries[k][c]);
                }
            }
        }
        OctonionMatrix3::new(e)
    }

    /// Rows and columns relabelled by `perm`: entry `(perm[r], perm[c])` of
    /// the result is entry `(r, c)` of `self`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let mut e = [[Octonion::zero(); 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                e[perm[r]][perm[c]] = self.entries[r][c];
            }
        }
        OctonionMatrix3::new(e)
    }

    /// `(M X) M†`
    pub fn sandwich(&self, x: &HermitianMatrix3<T>) -> Self {
        self.mul(&Self::from_hermitian(x)).mul(&self.conj_transpose())
    }
}

impl<T: Real> OctonionMatrix3<T> {
    /// Largest deviation from Hermiticity, scaled by the largest entry.
    pub fn hermiticity_residual(&self) -> T {
        let mut scale = T::zero();
        let mut res = T::zero();
        for r in 0..3 {
            for c in 0..3 {
                scale = scale.max(self.entries[r][c].max_abs());
                let d = self.entries[r][c] - self.entries[c][r].conj();
                res = res.max(d.max_abs());
            }
        }
        if scale > T::zero() {
            res / scale.max(T::one())
        } else {
            res
        }
    }

    /// Reads back the Hermitian part, rejecting matrices whose residual
    /// exceeds `tol`.
    pub fn to_hermitian(&self, tol: T) -> Result<HermitianMatrix3<T>> {
        let res = self.hermiticity_residual();
        if res.is_nan() || res > tol {
            return Err(Error::NotHermitian {
                residual: res.to_f64_lossy(),
            });
        }
        let e = &self.entries;
        let half = T::lit(0.5);
        let avg = |r: usize, c: usize| (e[r][c] + e[c][r].conj()).scale(half);
        Ok(HermitianMatrix3::new(
            [e[0][0].re(), e[1][1].re(), e[2][2].re()],
            avg(0, 1),
            avg(0, 2),
            avg(1, 2),
        ))
    }
}
