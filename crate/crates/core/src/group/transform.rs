use crate::error::{Error, Result};
use crate::group::family::{BlockType, BoostAxis, GeneratorFamily, RotationPlane};
use crate::group::g2::{g2_automorphism, OctonionMap};
use crate::jordan::{HermitianMatrix3, OctonionMatrix3};
use crate::octonion::{Octonion, Unit};
use crate::scalar::Real;

/// Relative Hermiticity tolerance for the output of `X ↦ MXM†`.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// How a group element acts on `H₃(𝕆)`.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixTransform<T> {
    /// `X ↦ M X M†`
    Single(OctonionMatrix3<T>),
    /// `X ↦ M₂ (M₁ X M₁†) M₂†`; the parentheses matter.
    Nested {
        inner: OctonionMatrix3<T>,
        outer: OctonionMatrix3<T>,
    },
    /// An octonion automorphism applied to every entry.
    Entrywise(OctonionMap<T>),
}

impl<T: Real> MatrixTransform<T> {
    pub fn identity() -> Self {
        MatrixTransform::Single(OctonionMatrix3::identity())
    }

    pub fn nested(inner: OctonionMatrix3<T>, outer: OctonionMatrix3<T>) -> Self {
        MatrixTransform::Nested { inner, outer }
    }

    pub fn single_matrix(&self) -> Option<&OctonionMatrix3<T>> {
        match self {
            MatrixTransform::Single(m) => Some(m),
            _ => None,
        }
    }

    pub fn apply(&self, x: &HermitianMatrix3<T>) -> Result<HermitianMatrix3<T>> {
        let tol = T::lit(HERMITICITY_TOL);
        match self {
            MatrixTransform::Single(m) => m.sandwich(x).to_hermitian(tol),
            MatrixTransform::Nested { inner, outer } => {
                let y = inner.sandwich(x).to_hermitian(tol)?;
                outer.sandwich(&y).to_hermitian(tol)
            }
            MatrixTransform::Entrywise(g) => Ok(x.map_off_diagonal(|o| g.apply(o))),
        }
    }
}

/// `M₂ (M₁ X M₁†) M₂†`
pub fn nested_apply<T: Real>(
    outer: &MatrixTransform<T>,
    inner: &MatrixTransform<T>,
    x: &HermitianMatrix3<T>,
) -> Result<HermitianMatrix3<T>> {
    outer.apply(&inner.apply(x)?)
}

fn embed<T: Real>(block: BlockType, m: [[Octonion<T>; 2]; 2]) -> OctonionMatrix3<T> {
    let z = Octonion::zero();
    let one = Octonion::one();
    OctonionMatrix3::new([[m[0][0], m[0][1], z], [m[1][0], m[1][1], z], [z, z, one]])
        .permuted(block.permutation())
}

/// The curve of `family` evaluated at `param` (an angle for rotations,
/// phases and `G₂`, a rapidity for boosts).
pub fn build_transform<T: Real>(family: &GeneratorFamily, param: T) -> MatrixTransform<T> {
    let half = param / T::two();
    let (c, s) = (half.cos(), half.sin());
    let (ch, sh) = (half.cosh(), half.sinh());
    let re = Octonion::real;
    let unit_part = |u: Option<Unit>, x: T| Octonion::complex(T::zero(), x, u.unwrap_or(Unit::L));
    match *family {
        GeneratorFamily::Rotation { plane, block, unit } => {
            let m = match plane {
                RotationPlane::XY => {
                    let u = unit.unwrap_or(Unit::L);
                    [
                        [Octonion::exp_basis(u, -half), Octonion::zero()],
                        [Octonion::zero(), Octonion::exp_basis(u, half)],
                    ]
                }
                RotationPlane::YZ => [
                    [re(c), unit_part(unit, -s)],
                    [unit_part(unit, -s), re(c)],
                ],
                RotationPlane::ZX => [[re(c), re(-s)], [re(s), re(c)]],
            };
            MatrixTransform::Single(embed(block, m))
        }
        GeneratorFamily::Boost { axis, block, unit } => {
            let m = match axis {
                BoostAxis::TZ => [
                    [re(half.exp()), Octonion::zero()],
                    [Octonion::zero(), re((-half).exp())],
                ],
                BoostAxis::TX => [[re(ch), re(sh)], [re(sh), re(ch)]],
                BoostAxis::TY => [
                    [re(ch), unit_part(unit, -sh)],
                    [unit_part(unit, sh), re(ch)],
                ],
            };
            MatrixTransform::Single(embed(block, m))
        }
        GeneratorFamily::Phase { block, unit } => {
            let d = [
                Octonion::exp_basis(unit, half),
                Octonion::exp_basis(unit, half),
                Octonion::exp_basis(unit, -param),
            ];
            MatrixTransform::Single(OctonionMatrix3::diagonal(d).permuted(block.permutation()))
        }
        GeneratorFamily::G2 { class, target } => {
            MatrixTransform::Entrywise(g2_automorphism(class, target, param))
        }
    }
}

/// Like [`build_transform`] but insists on a single matrix `M`.
pub fn build_matrix<T: Real>(family: &GeneratorFamily, param: T) -> Result<OctonionMatrix3<T>> {
    match build_transform(family, param) {
        MatrixTransform::Single(m) => Ok(m),
        _ => Err(Error::NotSingleMatrix(family.id())),
    }
}

/// `diag(a, a, 1)` with `a` pure imaginary: a flip of the 2×2 block.
pub fn flip<T: Real>(a: Octonion<T>) -> OctonionMatrix3<T> {
    OctonionMatrix3::diagonal([a, a, Octonion::one()])
}

/// Nested flip pair `diag(ℓ,ℓ,1)` then `diag(p̂,p̂,1)` with
/// `p̂ = cos(θ/2)ℓ + sin(θ/2)u`.
pub fn flip_pair<T: Real>(u: Unit, theta: T) -> MatrixTransform<T> {
    let half = theta / T::two();
    let l = Octonion::unit(Unit::L);
    let p = l.scale(half.cos()) + Octonion::unit(u).scale(half.sin());
    MatrixTransform::nested(flip(l), flip(p))
}

/// As [`flip_pair`] with the first flip `−ℓ`, which makes the curve pass
/// through the identity at `θ = 0`.
pub fn flip_curve<T: Real>(u: Unit, theta: T) -> MatrixTransform<T> {
    let half = theta / T::two();
    let l = Octonion::unit(Unit::L);
    let p = l.scale(half.cos()) + Octonion::unit(u).scale(half.sin());
    MatrixTransform::nested(flip(-l), flip(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::family::catalog;

    type H = HermitianMatrix3<f64>;
    type O = Octonion<f64>;

    fn sample() -> H {
        H::new(
            [0.5, -1.2, 2.0],
            O::new([0.1, 0.7, -0.3, 0.2, 0.9, -0.4, 0.05, 0.6]),
            O::new([-0.8, 0.2, 0.4, -0.6, 0.1, 0.3, -0.2, 0.5]),
            O::new([0.3, -0.5, 0.6, 0.1, -0.7, 0.2, 0.8, -0.1]),
        )
    }

    #[test]
    fn rz_matrix() {
        let t = 0.8f64;
        let m = build_matrix(&GeneratorFamily::xy(BlockType::I, Unit::L), t).unwrap();
        assert_eq!(m.entries[0][0], O::exp_basis(Unit::L, -t / 2.0));
        assert_eq!(m.entries[1][1], O::exp_basis(Unit::L, t / 2.0));
        assert_eq!(m.entries[2][2], O::one());
    }

    #[test]
    fn tz_matrix() {
        let b = 0.6f64;
        let m = build_matrix(&GeneratorFamily::tz(BlockType::I), b).unwrap();
        let d = OctonionMatrix3::diagonal([O::real((b / 2.0).exp()), O::real((-b / 2.0).exp()), O::one()]);
        assert_eq!(m, d);
    }

    #[test]
    fn phase_matrix() {
        let t = 0.3f64;
        let m = build_matrix(&GeneratorFamily::phase(BlockType::I, Unit::L), t).unwrap();
        let e = |x| O::exp_basis(Unit::L, x);
        assert_eq!(m, OctonionMatrix3::diagonal([e(t / 2.0), e(t / 2.0), e(-t)]));
    }

    #[test]
    fn g2_has_no_single_matrix() {
        let f = GeneratorFamily::g2(crate::group::family::G2Class::Two, Unit::KL).unwrap();
        assert!(matches!(build_matrix::<f64>(&f, 0.1), Err(Error::NotSingleMatrix(_))));
        assert!(matches!(build_transform::<f64>(&f, 0.1), MatrixTransform::Entrywise(_)));
    }

    #[test]
    fn zx_quarter_turn_on_diagonal() {
        let t = build_transform(&GeneratorFamily::zx(BlockType::I), std::f64::consts::FRAC_PI_2);
        let y = t.apply(&H::diagonal([1.0, 2.0, 3.0])).unwrap();
        let mut want = H::diagonal([1.5, 1.5, 3.0]);
        want.o12 = O::real(-0.5);
        assert!((y - want).max_abs() < 1e-15);
        assert!((y.det() - 6.0).abs() < 1e-14);
    }

    #[test]
    fn tz_boost_on_diagonal() {
        let b = 0.9f64;
        let t = build_transform(&GeneratorFamily::tz(BlockType::I), b);
        let y = t.apply(&H::diagonal([1.0, 2.0, 3.0])).unwrap();
        assert!((y - H::diagonal([b.exp(), 2.0 * (-b).exp(), 3.0])).max_abs() < 1e-14);
        assert!((y.det() - 6.0).abs() < 1e-13);
    }

    #[test]
    fn identity_at_zero() {
        let x = sample();
        for f in catalog() {
            let y = build_transform(&f, 0.0).apply(&x).unwrap();
            assert!((y - x).max_abs() < 1e-15, "{f}");
        }
        assert_eq!(MatrixTransform::identity().apply(&x).unwrap(), x);
    }

    #[test]
    fn block_types_move_the_block() {
        let b = 0.5f64;
        let d = H::diagonal([1.0, 2.0, 3.0]);
        let y = build_transform(&GeneratorFamily::tz(BlockType::II), b).apply(&d).unwrap();
        assert!((y - H::diagonal([1.0, 2.0 * b.exp(), 3.0 * (-b).exp()])).max_abs() < 1e-14);
        let y = build_transform(&GeneratorFamily::tz(BlockType::III), b).apply(&d).unwrap();
        assert!((y - H::diagonal([(-b).exp(), 2.0, 3.0 * b.exp()])).max_abs() < 1e-14);
    }

    #[test]
    fn catalog_preserves_det() {
        let x = sample();
        for f in catalog() {
            for p in [-2.3, 0.7] {
                let y = build_transform(&f, p).apply(&x).unwrap();
                assert!((y.det() - x.det()).abs() < 1e-11 * x.det().abs().max(1.0), "{f}");
            }
        }
    }

    #[test]
    fn flips() {
        let x = sample();
        for theta in [0.4, -1.3] {
            let y = flip_pair(Unit::I, theta).apply(&x).unwrap();
            assert!((y.det() - x.det()).abs() < 1e-12);
        }
        let y = flip_curve(Unit::J, 0.0).apply(&x).unwrap();
        assert!((y - x).max_abs() < 1e-15);
    }

    #[test]
    fn nesting_differs_from_flattened_product() {
        let x = sample();
        let m1 = flip(O::unit(Unit::L));
        let m2 = flip(O::unit(Unit::I));
        let nested = nested_apply(
            &MatrixTransform::Single(m2),
            &MatrixTransform::Single(m1),
            &x,
        )
        .unwrap();
        let flat = m2.mul(&m1).sandwich(&x);
        let diff = flat
            .to_hermitian(1e-10)
            .map(|f| (f - nested).max_abs())
            .unwrap_or(f64::INFINITY);
        assert!(diff > 1e-3);
    }
}
