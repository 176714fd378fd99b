use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::octonion::Octonion;
use crate::scalar::{Real, Scalar};

/// Element of the Albert algebra: a 3×3 octonionic Hermitian matrix.
///
/// Only the diagonal and the upper triangle are stored; entry `(2,1)` is
/// `conj(o12)` and so on. The serde form is the matrix file format
/// `{"diag":[d1,d2,d3],"o12":[..8],"o13":[..8],"o23":[..8]}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HermitianMatrix3<T> {
    pub diag: [T; 3],
    pub o12: Octonion<T>,
    pub o13: Octonion<T>,
    pub o23: Octonion<T>,
}

/// Real dimension of the algebra.
pub const ALBERT_DIM: usize = 27;

impl<T: Scalar> HermitianMatrix3<T> {
    pub fn new(diag: [T; 3], o12: Octonion<T>, o13: Octonion<T>, o23: Octonion<T>) -> Self {
        HermitianMatrix3 { diag, o12, o13, o23 }
    }

    pub fn zero() -> Self {
        Self::diagonal([T::zero(); 3])
    }

    pub fn identity() -> Self {
        Self::diagonal([T::one(); 3])
    }

    pub fn diagonal(diag: [T; 3]) -> Self {
        let z = Octonion::zero();
        HermitianMatrix3::new(diag, z, z, z)
    }

    /// Diagonal unit idempotent `E_ii` (0-based).
    pub fn unit_idempotent(i: usize) -> Self {
        let mut d = [T::zero(); 3];
        d[i] = T::one();
        Self::diagonal(d)
    }

    /// Entry `(r, c)`, 0-based.
    pub fn entry(&self, r: usize, c: usize) -> Octonion<T> {
        match (r, c) {
            (r, c) if r == c => Octonion::real(self.diag[r]),
            (0, 1) => self.o12,
            (0, 2) => self.o13,
            (1, 2) => self.o23,
            (1, 0) => self.o12.conj(),
            (2, 0) => self.o13.conj(),
            (2, 1) => self.o23.conj(),
            _ => panic!("entry ({r}, {c}) out of range"),
        }
    }

    pub(crate) fn off_mut(&mut self, r: usize, c: usize) -> &mut Octonion<T> {
        match (r.min(c), r.max(c)) {
            (0, 1) => &mut self.o12,
            (0, 2) => &mut self.o13,
            (1, 2) => &mut self.o23,
            _ => panic!("({r}, {c}) is not off-diagonal"),
        }
    }

    pub fn trace(&self) -> T {
        self.diag[0] + self.diag[1] + self.diag[2]
    }

    pub fn scale(&self, s: T) -> Self {
        HermitianMatrix3::new(
            self.diag.map(|d| d * s),
            self.o12.scale(s),
            self.o13.scale(s),
            self.o23.scale(s),
        )
    }

    /// Coordinates in file order: `d1 d2 d3`, then the 8 coefficients of
    /// `o12`, `o13`, `o23`.
    pub fn to_coords(&self) -> [T; ALBERT_DIM] {
        let mut v = [T::zero(); ALBERT_DIM];
        v[..3].copy_from_slice(&self.diag);
        v[3..11].copy_from_slice(&self.o12.coeffs);
        v[11..19].copy_from_slice(&self.o13.coeffs);
        v[19..27].copy_from_slice(&self.o23.coeffs);
        v
    }

    pub fn from_coords(v: &[T; ALBERT_DIM]) -> Self {
        let oct = |s: &[T]| Octonion::new(s.try_into().expect("8 coefficients"));
        HermitianMatrix3::new(
            [v[0], v[1], v[2]],
            oct(&v[3..11]),
            oct(&v[11..19]),
            oct(&v[19..27]),
        )
    }

    /// Coordinate basis vector `index` of the 27-dimensional algebra.
    pub fn coordinate_basis(index: usize) -> Self {
        let mut v = [T::zero(); ALBERT_DIM];
        v[index] = T::one();
        Self::from_coords(&v)
    }

    /// Applies `f` to each off-diagonal entry.
    pub fn map_off_diagonal(&self, f: impl Fn(&Octonion<T>) -> Octonion<T>) -> Self {
        HermitianMatrix3::new(self.diag, f(&self.o12), f(&self.o13), f(&self.o23))
    }

    /// `½(AB + BA)` using octonionic matrix multiplication.
    pub fn jordan(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            // (AB)_ii + (BA)_ii = 2 Re Σ_k A_ik B_ki
            let mut d = T::zero();
            for k in 0..3 {
                d = d + self.entry(i, k).mul(&other.entry(k, i)).re();
            }
            out.diag[i] = d;
        }
        for (r, c) in [(0, 1), (0, 2), (1, 2)] {
            let mut acc = Octonion::zero();
            for k in 0..3 {
                acc += self.entry(r, k).mul(&other.entry(k, c));
                acc += other.entry(r, k).mul(&self.entry(k, c));
            }
            *out.off_mut(r, c) = acc.scale(T::one().half());
        }
        out
    }

    /// `A ∘ A`
    pub fn square(&self) -> Self {
        self.jordan(self)
    }

    /// `tr(A ∘ B)`, the trace form.
    pub fn trace_form(&self, other: &Self) -> T {
        let d = (0..3).fold(T::zero(), |acc, i| acc + self.diag[i] * other.diag[i]);
        let o = self.o12.dot(&other.o12) + self.o13.dot(&other.o13) + self.o23.dot(&other.o23);
        d + T::two() * o
    }

    /// Freudenthal product
    /// `A∘B − ½(A trB + B trA) + ½(trA trB − tr(A∘B)) I`.
    pub fn freudenthal(&self, other: &Self) -> Self {
        let ta = self.trace();
        let tb = other.trace();
        let half = T::one().half();
        let jp = self.jordan(other);
        let shift = half * (ta * tb - jp.trace());
        jp - (self.scale(tb) + other.scale(ta)).scale(half) + Self::identity().scale(shift)
    }

    /// `A * A`, the Freudenthal adjugate.
    pub fn adjugate(&self) -> Self {
        self.freudenthal(self)
    }

    /// `½((tr A)² − tr(A²))`
    pub fn sigma(&self) -> T {
        let t = self.trace();
        (t * t - self.square().trace()).half()
    }

    /// `tr(A * A)`, equal to [`sigma`](Self::sigma).
    pub fn sigma_from_adjugate(&self) -> T {
        self.adjugate().trace()
    }

    /// `⅓ tr((A*A) ∘ A)`
    pub fn det(&self) -> T {
        let three = T::two() + T::one();
        self.adjugate().trace_form(self) / three
    }

    /// `(trace, sigma, det)`
    pub fn invariants(&self) -> (T, T, T) {
        (self.trace(), self.sigma(), self.det())
    }
}

impl<T: Real> HermitianMatrix3<T> {
    /// Frobenius norm `sqrt(tr(A∘A))`.
    pub fn norm(&self) -> T {
        self.trace_form(self).max(T::zero()).sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.to_coords().iter().fold(T::zero(), |m, x| m.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.to_coords().iter().all(|x| x.is_finite())
    }

    /// Number of nonzero eigenvalues from the invariants: 3 if `det ≠ 0`,
    /// 2 if `det = 0 ≠ σ`, 1 if `det = σ = 0 ≠ A`. Zero tests are relative
    /// to `‖A‖³`, `‖A‖²` with tolerance `tol`.
    pub fn nonzero_eigenvalue_count(&self, tol: T) -> usize {
        let n = self.norm();
        if n == T::zero() {
            return 0;
        }
        let (_, s, d) = self.invariants();
        if d.abs() > tol * n * n * n {
            3
        } else if s.abs() > tol * n * n {
            2
        } else {
            1
        }
    }
}

impl<T: Scalar> Add for HermitianMatrix3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        HermitianMatrix3::new(
            [
                self.diag[0] + rhs.diag[0],
                self.diag[1] + rhs.diag[1],
                self.diag[2] + rhs.diag[2],
            ],
            self.o12 + rhs.o12,
            self.o13 + rhs.o13,
            self.o23 + rhs.o23,
        )
    }
}

impl<T: Scalar> Sub for HermitianMatrix3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for HermitianMatrix3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}
