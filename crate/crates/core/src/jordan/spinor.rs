use serde::Serialize;

use crate::error::{Error, Result};
use crate::jordan::HermitianMatrix3;
use crate::octonion::{associator, Octonion};
use crate::scalar::{Real, Scalar};

/// 3-component octonionic column vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CayleySpinor<T> {
    pub components: [Octonion<T>; 3],
}

impl<T: Scalar> CayleySpinor<T> {
    pub fn new(components: [Octonion<T>; 3]) -> Self {
        CayleySpinor { components }
    }

    /// `[Ψ]`, the associator of the three components.
    pub fn associator(&self) -> Octonion<T> {
        let [a, b, c] = &self.components;
        associator(a, b, c)
    }

    /// `Ψ†Ψ`
    pub fn norm_sq(&self) -> T {
        self.components
            .iter()
            .fold(T::zero(), |acc, x| acc + x.norm_sq())
    }

    /// `Ψ†Φ = Σ conj(Ψₐ) Φₐ`
    pub fn inner(&self, other: &Self) -> Octonion<T> {
        self.components
            .iter()
            .zip(&other.components)
            .fold(Octonion::zero(), |acc, (x, y)| acc + x.conj().mul(y))
    }

    /// `ΨΨ†` without admissibility checks.
    pub fn outer(&self) -> HermitianMatrix3<T> {
        let [a, b, c] = &self.components;
        HermitianMatrix3::new(
            [a.norm_sq(), b.norm_sq(), c.norm_sq()],
            a.mul(&b.conj()),
            a.mul(&c.conj()),
            b.mul(&c.conj()),
        )
    }
}

impl<T: Real> CayleySpinor<T> {
    pub fn normalized(&self) -> Self {
        let n = self.norm_sq().sqrt();
        CayleySpinor::new(self.components.map(|x| x.scale(T::one() / n)))
    }

    /// `ΨΨ†` for an admissible spinor: `[Ψ] = 0` and `Ψ†Ψ = 1` to `tol`.
    pub fn square(&self, tol: T) -> Result<HermitianMatrix3<T>> {
        let n = self.norm_sq();
        if (n - T::one()).abs() > tol {
            return Err(Error::SpinorNotNormalized {
                norm_sq: n.to_f64_lossy(),
            });
        }
        let assoc = self.associator().norm();
        if assoc > tol {
            return Err(Error::SpinorNotAssociative {
                residual: assoc.to_f64_lossy(),
            });
        }
        Ok(self.outer())
    }

    /// A square root of a primitive idempotent `V = ΨΨ†`. The component on
    /// the largest diagonal entry is made real and positive.
    pub fn from_idempotent(v: &HermitianMatrix3<T>) -> Self {
        let i = (0..3)
            .max_by(|&x, &y| v.diag[x].partial_cmp(&v.diag[y]).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap_or(0);
        let root = v.diag[i].max(T::zero()).sqrt();
        let comps = [0, 1, 2].map(|r| {
            if root > T::zero() {
                v.entry(r, i).scale(T::one() / root)
            } else {
                Octonion::zero()
            }
        });
        CayleySpinor::new(comps)
    }
}

/// `ΨΨ†`, checked with tolerance `1e−12`.
pub fn spinor_square<T: Real>(psi: &CayleySpinor<T>) -> Result<HermitianMatrix3<T>> {
    psi.square(T::lit(1e-12))
}

/// Residuals of both characterizations of the Cayley plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Op2Membership<T> {
    pub member: bool,
    /// `‖V∘V − V‖`
    pub idempotency: T,
    /// `‖V*V‖`
    pub adjugate: T,
    /// `|tr V − 1|`
    pub trace: T,
    /// `|[o12, o13, o23]|`
    pub associator: T,
}

/// Tests `V∘V = V, tr V = 1` and `V*V = 0, tr V = 1` with tolerance `tol`.
/// Members also have associating off-diagonal components.
pub fn op2_membership<T: Real>(v: &HermitianMatrix3<T>, tol: T) -> Op2Membership<T> {
    let idempotency = (v.square() - *v).norm();
    let adjugate = v.adjugate().norm();
    let trace = (v.trace() - T::one()).abs();
    let associator = associator(&v.o12, &v.o13, &v.o23).norm();
    Op2Membership {
        member: idempotency <= tol && adjugate <= tol && trace <= tol,
        idempotency,
        adjugate,
        trace,
        associator,
    }
}

/// `tr(vv† ∘ ww†)`, the transition probability between two states.
pub fn transition_probability<T: Scalar>(v: &CayleySpinor<T>, w: &CayleySpinor<T>) -> T {
    v.outer().trace_form(&w.outer())
}

/// `(v†w)(w†v)`, which equals [`transition_probability`] only when the
/// components of `v` and `w` together lie in an associative subalgebra.
pub fn amplitude_squared<T: Scalar>(v: &CayleySpinor<T>, w: &CayleySpinor<T>) -> T {
    v.inner(w).mul(&w.inner(v)).re()
}
