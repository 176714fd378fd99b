//! Tangent spaces of the generator families and the dimensions they span.
//!
//! Each family is linearized at the identity by central differences on the
//! 27 coordinate basis matrices. The span of a set of tangents, flattened to
//! 729-vectors, is measured by its numerical rank.

mod svd;

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{build_transform, catalog, naive_generators, so8_copy, BlockType, GeneratorFamily};
use crate::jordan::{HermitianMatrix3, ALBERT_DIM};
use crate::scalar::Real;

pub use svd::singular_values;

/// Finite-difference step.
pub const STEP: f64 = 1e-5;
/// Allowed disagreement between steps `h` and `h/2`.
pub const STEP_CONSISTENCY_TOL: f64 = 1e-8;
/// Singular values below this fraction of the largest are rejected.
pub const RANK_TOL: f64 = 1e-8;
/// Smallest accepted over largest rejected singular value.
pub const MIN_GAP: f64 = 1e3;

/// Linearization `d/dt g(t)·X |_{t=0}` as a 27×27 matrix on coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentOperator<T> {
    pub family_id: String,
    /// `matrix[r][c]`: coordinate `r` of the image of basis vector `c`.
    pub matrix: Vec<[T; ALBERT_DIM]>,
    /// `max |D(h) − D(h/2)|` observed while building.
    pub step_residual: T,
}

impl<T: Real> TangentOperator<T> {
    pub fn zero(family_id: impl Into<String>) -> Self {
        TangentOperator {
            family_id: family_id.into(),
            matrix: vec![[T::zero(); ALBERT_DIM]; ALBERT_DIM],
            step_residual: T::zero(),
        }
    }

    pub fn apply(&self, x: &HermitianMatrix3<T>) -> HermitianMatrix3<T> {
        let v = x.to_coords();
        let mut out = [T::zero(); ALBERT_DIM];
        for (o, row) in out.iter_mut().zip(&self.matrix) {
            *o = row.iter().zip(&v).fold(T::zero(), |acc, (&m, &x)| acc + m * x);
        }
        HermitianMatrix3::from_coords(&out)
    }

    pub fn flatten(&self) -> Vec<T> {
        self.matrix.iter().flatten().copied().collect()
    }

    /// `max_X |tr(T X)| / |X|` over coordinate basis matrices: how far the
    /// tangent moves the trace.
    pub fn trace_leak(&self) -> T {
        (0..ALBERT_DIM)
            .map(|c| (self.matrix[0][c] + self.matrix[1][c] + self.matrix[2][c]).abs())
            .fold(T::zero(), T::max)
    }

    /// `d/dt det(g(t)X)` at `t = 0`.
    pub fn det_derivative(&self, x: &HermitianMatrix3<T>) -> T {
        det_derivative(x, &self.apply(x))
    }
}

/// Gradient of `det` at `X` under the trace form: `X * X`.
pub fn det_gradient<T: Real>(x: &HermitianMatrix3<T>) -> HermitianMatrix3<T> {
    x.adjugate()
}

/// Directional derivative `tr((X*X) ∘ Y)`.
pub fn det_derivative<T: Real>(x: &HermitianMatrix3<T>, y: &HermitianMatrix3<T>) -> T {
    det_gradient(x).trace_form(y)
}

fn central_difference<T, F>(action: &F, h: T) -> Result<Vec<[T; ALBERT_DIM]>>
where
    T: Real,
    F: Fn(T, &HermitianMatrix3<T>) -> Result<HermitianMatrix3<T>>,
{
    let mut m = vec![[T::zero(); ALBERT_DIM]; ALBERT_DIM];
    for c in 0..ALBERT_DIM {
        let e = HermitianMatrix3::coordinate_basis(c);
        let plus = action(h, &e)?.to_coords();
        let minus = action(-h, &e)?.to_coords();
        for (r, row) in m.iter_mut().enumerate() {
            row[c] = (plus[r] - minus[r]) / (T::two() * h);
        }
    }
    Ok(m)
}

/// Tangent of an arbitrary one-parameter action, checked against step `h/2`.
pub fn tangent_of<T, F>(family_id: &str, action: F) -> Result<TangentOperator<T>>
where
    T: Real,
    F: Fn(T, &HermitianMatrix3<T>) -> Result<HermitianMatrix3<T>>,
{
    let h = T::lit(STEP);
    let coarse = central_difference(&action, h)?;
    let fine = central_difference(&action, h / T::two())?;
    let mut residual = T::zero();
    let mut scale = T::one();
    for (a, b) in coarse.iter().flatten().zip(fine.iter().flatten()) {
        residual = residual.max((*a - *b).abs());
        scale = scale.max(a.abs());
    }
    let residual = residual / scale;
    if residual > T::lit(STEP_CONSISTENCY_TOL) {
        return Err(Error::StepInconsistent {
            family: family_id.to_string(),
            residual: residual.to_f64_lossy(),
        });
    }
    Ok(TangentOperator {
        family_id: family_id.to_string(),
        matrix: coarse,
        step_residual: residual,
    })
}

/// Tangent of a catalog family at parameter 0.
pub fn tangent<T: Real>(family: &GeneratorFamily) -> Result<TangentOperator<T>> {
    tangent_of(&family.id(), |t, x| build_transform(family, t).apply(x))
}

/// Numerical rank of a set of tangents.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpanReport<T> {
    pub name: String,
    pub ids: Vec<String>,
    pub rank: usize,
    pub singular_values: Vec<T>,
    /// Smallest accepted over largest rejected singular value. With nothing
    /// rejected the denominator is the roundoff floor `σ₁·ε·√729`.
    pub gap: T,
    pub conclusive: bool,
}

/// Rank of the span of `tangents` with relative threshold `1e−8`.
pub fn span_rank<T: Real>(name: &str, tangents: &[&TangentOperator<T>]) -> Result<SpanReport<T>> {
    if tangents.is_empty() {
        return Err(Error::EmptySpan);
    }
    let rows: Vec<Vec<T>> = tangents.iter().map(|t| t.flatten()).collect();
    let sv = singular_values(&rows);
    let top = sv[0];
    let floor = top * T::epsilon() * T::lit((ALBERT_DIM * ALBERT_DIM) as f64).sqrt();
    let rank = if top == T::zero() {
        0
    } else {
        sv.iter().take_while(|&&s| s > top * T::lit(RANK_TOL)).count()
    };
    let gap = if rank == 0 {
        T::infinity()
    } else {
        let rejected = sv.get(rank).copied().unwrap_or(T::zero()).max(floor);
        sv[rank - 1] / rejected
    };
    Ok(SpanReport {
        name: name.to_string(),
        ids: tangents.iter().map(|t| t.family_id.clone()).collect(),
        rank,
        singular_values: sv,
        gap,
        conclusive: gap >= T::lit(MIN_GAP),
    })
}

/// Tangents keyed by family id, computed once.
#[derive(Clone, Debug)]
pub struct TangentCache<T> {
    tangents: HashMap<String, TangentOperator<T>>,
}

impl<T: Real> TangentCache<T> {
    /// Every family of the catalog and of the naive three-copy set.
    pub fn build() -> Result<Self> {
        let mut tangents = HashMap::new();
        for f in naive_generators().iter().chain(&catalog()) {
            if let Entry::Vacant(slot) = tangents.entry(f.id()) {
                slot.insert(tangent(f)?);
            }
        }
        Ok(TangentCache { tangents })
    }

    pub fn get(&self, family: &GeneratorFamily) -> Result<&TangentOperator<T>> {
        let id = family.id();
        self.tangents.get(&id).ok_or(Error::UnknownFamily(id))
    }

    pub fn span(&self, name: &str, families: &[GeneratorFamily]) -> Result<SpanReport<T>> {
        let ts = families.iter().map(|f| self.get(f)).collect::<Result<Vec<_>>>()?;
        span_rank(name, &ts)
    }
}

/// A measured dimension next to the expected one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimensionCheck<T> {
    pub expected: usize,
    pub report: SpanReport<T>,
}

impl<T: Real> DimensionCheck<T> {
    pub fn passed(&self) -> bool {
        self.report.rank == self.expected && self.report.conclusive
    }
}

/// The named subsets and their expected dimensions, in report order.
pub fn named_subsets() -> Vec<(&'static str, Vec<GeneratorFamily>, usize)> {
    let cat = catalog();
    let pick = |p: &dyn Fn(&GeneratorFamily) -> bool| cat.iter().filter(|f| p(f)).cloned().collect::<Vec<_>>();
    let so8 = so8_copy(BlockType::I);
    let so7 = so8
        .iter()
        .filter(|f| !matches!(f, GeneratorFamily::Rotation { .. }))
        .cloned()
        .collect();
    vec![
        ("E6", cat.clone(), 78),
        ("F4", pick(&|f| !f.is_boost()), 52),
        ("boosts", pick(&|f| f.is_boost()), 26),
        ("G2", pick(&|f| f.is_g2()), 14),
        ("SU3", pick(&|f| f.is_g2() && f.fixes_l()), 8),
        ("SO8", so8, 28),
        ("SO7", so7, 21),
    ]
}

/// Ranks of every named subset.
pub fn subgroup_dimensions<T: Real>(cache: &TangentCache<T>) -> Result<Vec<DimensionCheck<T>>> {
    named_subsets()
        .into_iter()
        .map(|(name, fams, expected)| {
            Ok(DimensionCheck {
                expected,
                report: cache.span(name, &fams)?,
            })
        })
        .collect()
}

/// The union of the three block-type `SO(8)` copies; it spans 28, not 84.
pub fn triality_check<T: Real>(cache: &TangentCache<T>) -> Result<DimensionCheck<T>> {
    let fams: Vec<_> = BlockType::ALL.into_iter().flat_map(so8_copy).collect();
    Ok(DimensionCheck {
        expected: 28,
        report: cache.span("triality", &fams)?,
    })
}

/// The 135 families before deduplication; they still span only 78.
pub fn naive_span<T: Real>(cache: &TangentCache<T>) -> Result<DimensionCheck<T>> {
    Ok(DimensionCheck {
        expected: 78,
        report: cache.span("naive", &naive_generators())?,
    })
}
