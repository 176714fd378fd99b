//! Spectral decomposition `A = Σ λᵢ Vᵢ` into a Jordan frame of primitive
//! idempotents.
//!
//! The cubic is solved on the normalized deviatoric part of `A`. The root
//! farthest from the other two gets its idempotent from the Freudenthal
//! adjugate of `A − λI`. The remaining pair lives in the rank-2 idempotent
//! `W = I − V`, whose Peirce space is a spin factor: every element there
//! is `αW + D` with `D∘D = δ²W`, so the pair is `α ± δ` with idempotents
//! `(W ± D/δ)/2`. This keeps the pair accurate even when its gap is far
//! below the square-root-of-epsilon accuracy of the cubic.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::jordan::eigen::normalized_roots;
use crate::jordan::HermitianMatrix3;
use crate::scalar::Real;

/// Relative eigenvalue gap below which a pair is treated as degenerate.
pub const DEGENERACY_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectralPath {
    /// Three separated eigenvalues.
    Distinct,
    /// Two eigenvalues within the degeneracy tolerance; the frame inside
    /// their eigenspace is one valid choice among many.
    Doublet,
    /// All three equal; the diagonal frame is returned.
    Triple,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenPair<T> {
    pub eigenvalue: T,
    pub idempotent: HermitianMatrix3<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralDecomposition<T> {
    /// Sorted by descending eigenvalue.
    pub pairs: [EigenPair<T>; 3],
    pub path: SpectralPath,
}

/// Worst-case residuals of a decomposition against its input.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectralResiduals<T> {
    /// `max ‖A∘Vᵢ − λᵢVᵢ‖`
    pub eigen: T,
    /// `‖A − Σ λᵢVᵢ‖`
    pub reconstruction: T,
    /// `max ‖Vᵢ∘Vᵢ − Vᵢ‖`
    pub idempotency: T,
    /// `max_{i≠j} ‖Vᵢ∘Vⱼ‖`
    pub orthogonality: T,
    /// `‖ΣVᵢ − I‖`
    pub completeness: T,
    /// `max |tr Vᵢ − 1|`
    pub trace: T,
}

impl<T: Real> SpectralResiduals<T> {
    pub fn max(&self) -> T {
        [
            self.eigen,
            self.reconstruction,
            self.idempotency,
            self.orthogonality,
            self.completeness,
            self.trace,
        ]
        .into_iter()
        .fold(T::zero(), T::max)
    }
}

impl<T: Real> SpectralDecomposition<T> {
    pub fn eigenvalues(&self) -> [T; 3] {
        self.pairs.map(|p| p.eigenvalue)
    }

    pub fn idempotents(&self) -> [HermitianMatrix3<T>; 3] {
        self.pairs.map(|p| p.idempotent)
    }

    pub fn is_degenerate(&self) -> bool {
        self.path != SpectralPath::Distinct
    }

    pub fn reconstruct(&self) -> HermitianMatrix3<T> {
        self.pairs
            .iter()
            .fold(HermitianMatrix3::zero(), |acc, p| acc + p.idempotent.scale(p.eigenvalue))
    }

    pub fn residuals(&self, a: &HermitianMatrix3<T>) -> SpectralResiduals<T> {
        let v = self.idempotents();
        let mut eigen = T::zero();
        let mut idempotency = T::zero();
        let mut orthogonality = T::zero();
        let mut trace = T::zero();
        for (i, p) in self.pairs.iter().enumerate() {
            let vi = &p.idempotent;
            eigen = eigen.max((a.jordan(vi) - vi.scale(p.eigenvalue)).norm());
            idempotency = idempotency.max((vi.square() - *vi).norm());
            trace = trace.max((vi.trace() - T::one()).abs());
            for vj in &v[i + 1..] {
                orthogonality = orthogonality.max(vi.jordan(vj).norm());
            }
        }
        let sum = v[0] + v[1] + v[2];
        SpectralResiduals {
            eigen,
            reconstruction: (*a - self.reconstruct()).norm(),
            idempotency,
            orthogonality,
            completeness: (sum - HermitianMatrix3::identity()).norm(),
            trace,
        }
    }
}

/// `U_W(X) = 2W∘(W∘X) − W∘X`, which is `WXW` in the associative case.
fn peirce_project<T: Real>(w: &HermitianMatrix3<T>, x: &HermitianMatrix3<T>) -> HermitianMatrix3<T> {
    let wx = w.jordan(x);
    w.jordan(&wx).scale(T::two()) - wx
}

/// McWeeny step `3V² − 2V³` toward the nearest idempotent.
fn purify<T: Real>(v: &HermitianMatrix3<T>) -> HermitianMatrix3<T> {
    let v2 = v.square();
    let v3 = v.jordan(&v2);
    v2.scale(T::lit(3.0)) - v3.scale(T::two())
}

fn purified<T: Real>(v: HermitianMatrix3<T>) -> HermitianMatrix3<T> {
    purify(&purify(&v))
}

/// Splits `Y` in the Peirce space of the rank-2 idempotent `W` as
/// `αW + D`, returning `(α, δ, D)` with `D∘D = δ²W`.
fn spin_split<T: Real>(
    w: &HermitianMatrix3<T>,
    y: &HermitianMatrix3<T>,
) -> (T, T, HermitianMatrix3<T>) {
    let alpha = y.trace() / T::two();
    let d = *y - w.scale(alpha);
    let delta = (d.trace_form(&d) / T::two()).max(T::zero()).sqrt();
    (alpha, delta, d)
}

/// Some primitive idempotent below the rank-2 idempotent `W`: project
/// trial matrices into the Peirce space of `W` and keep the one whose
/// projection is farthest from a multiple of `W`. In the associative case
/// this is the normalized square of the largest column of `W`.
fn primitive_below<T: Real>(w: &HermitianMatrix3<T>) -> HermitianMatrix3<T> {
    let mut trials: Vec<HermitianMatrix3<T>> = (0..3).map(HermitianMatrix3::unit_idempotent).collect();
    for (r, c) in [(0, 1), (0, 2), (1, 2)] {
        let mut x = HermitianMatrix3::zero();
        *x.off_mut(r, c) = crate::octonion::Octonion::one();
        trials.push(x);
    }
    let (_, delta, d) = trials
        .iter()
        .map(|x| spin_split(w, &peirce_project(w, x)))
        .fold(None::<(T, T, HermitianMatrix3<T>)>, |best, cand| match best {
            Some(b) if b.1 >= cand.1 => Some(b),
            _ => Some(cand),
        })
        .expect("non-empty trial set");
    purified((*w + d.scale(T::one() / delta)).scale(T::lit(0.5)))
}

/// Jordan frame and eigenvalues of `A`.
pub fn spectral_decompose<T: Real>(a: &HermitianMatrix3<T>) -> Result<SpectralDecomposition<T>> {
    let scale = a.norm();
    let tol = T::lit(DEGENERACY_TOL);
    let triple = |mean: T| SpectralDecomposition {
        pairs: [0, 1, 2].map(|i| EigenPair {
            eigenvalue: mean,
            idempotent: HermitianMatrix3::unit_idempotent(i),
        }),
        path: SpectralPath::Triple,
    };

    let Some((mean, s, n, roots)) = normalized_roots(a)? else {
        return Ok(triple(a.trace() / T::lit(3.0)));
    };
    if s <= tol * scale {
        return Ok(triple(mean));
    }

    // The root with the larger gap to its neighbour.
    let isolated = if roots[0] - roots[1] >= roots[1] - roots[2] {
        roots[0]
    } else {
        roots[2]
    };
    let shifted = n - HermitianMatrix3::identity().scale(isolated);
    let adj = shifted.adjugate();
    let v_iso = purified(adj.scale(T::one() / adj.trace()));
    let mu_iso = n.trace_form(&v_iso);

    let w = HermitianMatrix3::identity() - v_iso;
    let (alpha, delta, d) = spin_split(&w, &peirce_project(&w, &n));

    let (pair, path) = if T::two() * delta * s <= tol * scale {
        let v = primitive_below(&w);
        let rest = purified(w - v);
        ([(alpha, v), (alpha, rest)], SpectralPath::Doublet)
    } else {
        let u = d.scale(T::one() / delta);
        let half = T::lit(0.5);
        (
            [
                (alpha + delta, purified((w + u).scale(half))),
                (alpha - delta, purified((w - u).scale(half))),
            ],
            SpectralPath::Distinct,
        )
    };

    let mut pairs = [(mu_iso, v_iso), pair[0], pair[1]].map(|(mu, v)| EigenPair {
        eigenvalue: mean + s * mu,
        idempotent: v,
    });
    pairs.sort_by(|x, y| y.eigenvalue.partial_cmp(&x.eigenvalue).unwrap_or(std::cmp::Ordering::Equal));
    Ok(SpectralDecomposition { pairs, path })
}
