//! Random octonions, matrices, spinors and Jordan frames.

use rand::Rng;

use crate::group::{build_transform, catalog, g2_families, GeneratorFamily};
use crate::jordan::{CayleySpinor, HermitianMatrix3};
use crate::octonion::{Octonion, Unit};

/// Coefficients uniform in `[−1, 1]`.
pub fn octonion<R: Rng + ?Sized>(rng: &mut R) -> Octonion<f64> {
    Octonion::new(std::array::from_fn(|_| rng.random_range(-1.0..=1.0)))
}

/// Quaternionic: only the `1, i, j, k` coefficients are nonzero.
pub fn quaternion<R: Rng + ?Sized>(rng: &mut R) -> Octonion<f64> {
    let mut q = octonion(rng);
    q.coeffs[4..].fill(0.0);
    q
}

/// A pure imaginary octonion of unit norm.
pub fn unit_imaginary<R: Rng + ?Sized>(rng: &mut R) -> Octonion<f64> {
    loop {
        let mut s = octonion(rng);
        s.coeffs[0] = 0.0;
        let n = s.norm();
        if n > 1e-3 {
            return s.scale(1.0 / n);
        }
    }
}

pub fn unit<R: Rng + ?Sized>(rng: &mut R) -> Unit {
    Unit::ALL[rng.random_range(0..7)]
}

/// Entries uniform in `[−1, 1]`.
pub fn hermitian<R: Rng + ?Sized>(rng: &mut R) -> HermitianMatrix3<f64> {
    HermitianMatrix3::new(
        std::array::from_fn(|_| rng.random_range(-1.0..=1.0)),
        octonion(rng),
        octonion(rng),
        octonion(rng),
    )
}

/// A product of `steps` random trace-preserving catalog rotations at
/// angles in `[−π, π]`.
pub fn rotation_word<R: Rng + ?Sized>(rng: &mut R, steps: usize) -> Vec<(GeneratorFamily, f64)> {
    let rotations: Vec<_> = catalog().into_iter().filter(|f| !f.is_boost()).collect();
    (0..steps)
        .map(|_| {
            let f = rotations[rng.random_range(0..rotations.len())];
            (f, rng.random_range(-std::f64::consts::PI..=std::f64::consts::PI))
        })
        .collect()
}

pub fn apply_word(word: &[(GeneratorFamily, f64)], x: &HermitianMatrix3<f64>) -> HermitianMatrix3<f64> {
    word.iter().fold(*x, |acc, (f, t)| {
        build_transform(f, *t)
            .apply(&acc)
            .expect("rotations keep matrices Hermitian")
    })
}

/// A generic orthogonal frame of primitive idempotents: the image of the
/// diagonal frame under a random rotation word.
pub fn frame<R: Rng + ?Sized>(rng: &mut R) -> [HermitianMatrix3<f64>; 3] {
    let word = rotation_word(rng, 10);
    [0, 1, 2].map(|i| apply_word(&word, &HermitianMatrix3::unit_idempotent(i)))
}

/// A normalized spinor with associating components: a quaternionic spinor
/// moved by a random octonion automorphism.
pub fn cayley_spinor<R: Rng + ?Sized>(rng: &mut R) -> CayleySpinor<f64> {
    let g2 = g2_families();
    let maps: Vec<_> = (0..6)
        .map(|_| {
            let f = g2[rng.random_range(0..g2.len())];
            match build_transform(&f, rng.random_range(-3.0..=3.0)) {
                crate::group::MatrixTransform::Entrywise(m) => m,
                _ => unreachable!("G2 families act entrywise"),
            }
        })
        .collect();
    let comps = [0; 3].map(|_| maps.iter().fold(quaternion(rng), |x, m| m.apply(&x)));
    CayleySpinor::new(comps).normalized()
}
