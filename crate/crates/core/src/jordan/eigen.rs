use crate::error::{Error, Result};
use crate::jordan::HermitianMatrix3;
use crate::scalar::Real;

/// Real roots of `λ³ + aλ² + bλ + c`, descending.
///
/// Uses the trigonometric form for three real roots. The arccos argument
/// is clamped to `[−1, 1]`; a discriminant below `−tol` is reported as an
/// error instead of being clamped away.
pub fn cubic_real_roots<T: Real>(a: T, b: T, c: T, tol: T) -> Result<[T; 3]> {
    let three = T::lit(3.0);
    let shift = -a / three;
    let p = b - a * a / three;
    let q = T::lit(2.0) * a * a * a / T::lit(27.0) - a * b / three + c;
    let disc = -(T::lit(4.0) * p * p * p + T::lit(27.0) * q * q);
    if disc < -tol {
        return Err(Error::ComplexEigenvalues {
            discriminant: disc.to_f64_lossy(),
        });
    }
    if p >= T::zero() {
        // p ≈ 0 and q ≈ 0: triple root
        return Ok([shift; 3]);
    }
    let r = (three * q / (T::lit(2.0) * p)) * (-three / p).sqrt();
    let phi = r.max(-T::one()).min(T::one()).acos() / three;
    let amp = T::lit(2.0) * (-p / three).sqrt();
    let turn = T::lit(2.0) * T::PI() / three;
    Ok([
        shift + amp * phi.cos(),
        shift + amp * (phi - turn).cos(),
        shift + amp * (phi + turn).cos(),
    ])
}

/// Tolerance on the discriminant of the normalized characteristic cubic.
pub const DISCRIMINANT_TOL: f64 = 1e-9;

/// Roots of the characteristic equation of a deviatoric matrix scaled to
/// unit norm. Returns `None` when the deviatoric part vanishes.
pub(crate) fn normalized_roots<T: Real>(
    a: &HermitianMatrix3<T>,
) -> Result<Option<(T, T, HermitianMatrix3<T>, [T; 3])>> {
    let mean = a.trace() / T::lit(3.0);
    let dev = *a - HermitianMatrix3::identity().scale(mean);
    let s = dev.norm();
    if s == T::zero() || !s.is_finite() {
        return Ok(None);
    }
    let n = dev.scale(T::one() / s);
    let (t, sigma, det) = n.invariants();
    let roots = cubic_real_roots(-t, sigma, -det, T::lit(DISCRIMINANT_TOL))?;
    Ok(Some((mean, s, n, roots)))
}

/// Eigenvalues of `A ∘ V = λV`: the roots of
/// `λ³ − (tr A)λ² + σ(A)λ − det A = 0`, descending.
///
/// The cubic is solved for `(A − (trA/3) I) / ‖A − (trA/3) I‖`, which keeps
/// the coefficients of order one regardless of the trace.
pub fn eigenvalues<T: Real>(a: &HermitianMatrix3<T>) -> Result<[T; 3]> {
    match normalized_roots(a)? {
        None => Ok([a.trace() / T::lit(3.0); 3]),
        Some((mean, s, _, roots)) => Ok(roots.map(|r| mean + s * r)),
    }
}
