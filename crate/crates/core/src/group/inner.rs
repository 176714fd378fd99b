use serde::Serialize;

use crate::error::{Error, Result};
use crate::octonion::{Octonion, Unit};
use crate::scalar::Real;

pub const INNER_TOL: f64 = 1e-10;

/// `x ↦ a x a⁻¹` for a fixed nonzero `a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InnerAutomorphism<T> {
    pub a: Octonion<T>,
    a_inv: Octonion<T>,
}

/// Worst unit pair for the homomorphism law of a conjugation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjugationWitness<T> {
    pub x: Unit,
    pub y: Unit,
    pub residual: T,
}

impl<T: Real> InnerAutomorphism<T> {
    pub fn new(a: Octonion<T>) -> Result<Self> {
        let a_inv = a.inverse().ok_or(Error::ZeroConjugator)?;
        Ok(InnerAutomorphism { a, a_inv })
    }

    /// `a = e^{nπŝ/3}`
    pub fn sixth_root(n: i32, s: &Octonion<T>) -> Result<Self> {
        let theta = T::PI() * T::lit(n as f64) / T::lit(3.0);
        Self::new(Octonion::exp_unit(s, theta)?)
    }

    /// Alternativity makes `(ax)a⁻¹ = a(xa⁻¹)`, so no bracketing choice.
    pub fn apply(&self, x: &Octonion<T>) -> Octonion<T> {
        self.a.mul(x).mul(&self.a_inv)
    }

    /// `|(axa⁻¹)(aya⁻¹) − a(xy)a⁻¹|` maximized over all 49 unit pairs.
    pub fn witness(&self) -> ConjugationWitness<T> {
        let mut worst = ConjugationWitness {
            x: Unit::I,
            y: Unit::I,
            residual: T::zero(),
        };
        for x in Unit::ALL {
            for y in Unit::ALL {
                let (ox, oy) = (Octonion::unit(x), Octonion::unit(y));
                let lhs = self.apply(&ox).mul(&self.apply(&oy));
                let rhs = self.apply(&ox.mul(&oy));
                let r = (lhs - rhs).norm();
                if r > worst.residual {
                    worst = ConjugationWitness { x, y, residual: r };
                }
            }
        }
        worst
    }

    pub fn homomorphism_residual(&self) -> T {
        self.witness().residual
    }
}

pub fn inner_automorphism<T: Real>(a: &Octonion<T>, x: &Octonion<T>) -> Result<Octonion<T>> {
    Ok(InnerAutomorphism::new(*a)?.apply(x))
}

/// Whether conjugation by `a` is an automorphism, to `1e−10`.
pub fn is_valid_conjugator<T: Real>(a: &Octonion<T>) -> Result<bool> {
    Ok(InnerAutomorphism::new(*a)?.homomorphism_residual() <= T::lit(INNER_TOL))
}
