//! `G₂` as rotations of the quaternionic pairs pointing to a unit.
//!
//! For a unit `u`, the six units orthogonal to it split into three
//! planes `{p, up}`. Rotating plane `m` by `wₘα` in the sense of left
//! multiplication by `e^{uwₘα}` is an automorphism whenever the weights sum
//! to zero; it fixes `1` and `u`.

use crate::group::family::G2Class;
use crate::octonion::{Octonion, StructureTable, Unit};
use crate::scalar::Real;

/// A real-linear map of the octonions, stored as an 8×8 matrix acting on
/// coefficient vectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctonionMap<T> {
    pub matrix: [[T; 8]; 8],
}

impl<T: Real> OctonionMap<T> {
    pub fn identity() -> Self {
        let mut m = [[T::zero(); 8]; 8];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = T::one();
        }
        OctonionMap { matrix: m }
    }

    pub fn apply(&self, x: &Octonion<T>) -> Octonion<T> {
        let mut out = [T::zero(); 8];
        for (o, row) in out.iter_mut().zip(&self.matrix) {
            *o = row
                .iter()
                .zip(&x.coeffs)
                .fold(T::zero(), |acc, (&m, &c)| acc + m * c);
        }
        Octonion::new(out)
    }

    /// `max |g(xy) − g(x)g(y)|` over all pairs of imaginary units.
    pub fn homomorphism_residual(&self) -> T {
        let mut worst = T::zero();
        for a in Unit::ALL {
            for b in Unit::ALL {
                let x = Octonion::unit(a);
                let y = Octonion::unit(b);
                let lhs = self.apply(&x.mul(&y));
                let rhs = self.apply(&x).mul(&self.apply(&y));
                worst = worst.max((lhs - rhs).max_abs());
            }
        }
        worst
    }
}

/// A plane `{p, up}` with `up = sign · partner`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointingPair {
    pub first: Unit,
    pub partner: Unit,
    pub sign: i8,
}

impl PointingPair {
    pub fn contains(&self, u: Unit) -> bool {
        self.first == u || self.partner == u
    }
}

/// The three planes pointing to `target`, ordered by their first unit.
pub fn pointing_pairs(target: Unit) -> [PointingPair; 3] {
    let table = StructureTable::get();
    let mut pairs = Vec::with_capacity(3);
    for p in Unit::ALL {
        if p == target || pairs.iter().any(|q: &PointingPair| q.contains(p)) {
            continue;
        }
        let (sign, w) = table.units(target, p);
        let partner = w.expect("distinct units multiply to a unit");
        pairs.push(PointingPair { first: p, partner, sign });
    }
    pairs.try_into().expect("three pairs per unit")
}

/// Per-plane weights for a class, in [`pointing_pairs`] order.
pub fn class_weights(class: G2Class, target: Unit) -> [i32; 3] {
    let pairs = pointing_pairs(target);
    match class {
        G2Class::Three { first } => {
            if first {
                [1, -1, 0]
            } else {
                [0, 1, -1]
            }
        }
        G2Class::One | G2Class::Two => {
            let l_pair = pairs.iter().position(|p| p.contains(Unit::L)).expect("ℓ pair");
            let mut w = [0; 3];
            let mut others = (0..3).filter(|&m| m != l_pair);
            let (a, b) = (others.next().unwrap(), others.next().unwrap());
            if class == G2Class::One {
                w[a] = -1;
                w[b] = 1;
            } else {
                w[a] = 1;
                w[b] = 1;
                w[l_pair] = -2;
            }
            w
        }
    }
}

/// The automorphism of a class at angle `alpha`.
pub fn g2_automorphism<T: Real>(class: G2Class, target: Unit, alpha: T) -> OctonionMap<T> {
    let pairs = pointing_pairs(target);
    let weights = class_weights(class, target);
    let mut map = OctonionMap::identity();
    for (pair, w) in pairs.iter().zip(weights) {
        let phi = alpha * T::lit(w as f64);
        let (c, s) = (phi.cos(), phi.sin());
        let sign = T::lit(pair.sign as f64);
        let p = pair.first.index();
        let q = pair.partner.index();
        // a·p + b·(up), partner coefficient = sign·b
        // p ↦ c·p + s·(up);  up ↦ c·(up) − s·p
        let m = &mut map.matrix;
        m[p][p] = c;
        m[p][q] = -s * sign;
        m[q][p] = s * sign;
        m[q][q] = c;
    }
    map
}

/// `g(x)` for the class/target family at angle `alpha`. Class 3 uses the
/// `{iℓ,i}:α, {jℓ,j}:−α` member.
pub fn g2_apply<T: Real>(class: G2Class, target: Unit, alpha: T, x: &Octonion<T>) -> Octonion<T> {
    g2_automorphism(class, target, alpha).apply(x)
}
