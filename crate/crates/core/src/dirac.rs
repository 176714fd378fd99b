//! Massless Dirac states as blocks of `H₃(𝕆)`.
//!
//! Singling out the third row and column splits a matrix into a momentum
//! block `P`, a two-component spinor `ψ` and a scalar `n`:
//! `𝓟 = [[P, ψ], [ψ†, n]]`. Then `𝓟*𝓟` has blocks
//! `[[tilde(ψψ†) − nP̃, P̃ψ], [(P̃ψ)†, det P]]`, so `𝓟*𝓟 = 0` contains the
//! massless Dirac equation `P̃ψ = 0` with `det P = 0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{build_matrix, BlockType, GeneratorFamily};
use crate::jordan::{HermitianMatrix2, HermitianMatrix3};
use crate::octonion::{commutator, Octonion, Unit};
use crate::scalar::{Real, Scalar};

pub type Spinor2<T> = [Octonion<T>; 2];

/// Coplanarity tolerance for the components of `θ`, relative to `|θ|²`.
pub const COPLANAR_TOL: f64 = 1e-12;

/// `P̃ = P − tr(P) I`
pub fn trace_reversal<T: Scalar>(p: &HermitianMatrix2<T>) -> HermitianMatrix2<T> {
    p.trace_reversed()
}

/// `(P̃ψ, det P)`; both vanish for a solution.
pub fn dirac_defect<T: Scalar>(p: &HermitianMatrix2<T>, psi: &Spinor2<T>) -> (Spinor2<T>, T) {
    (p.trace_reversed().mul_vec(psi), p.det())
}

/// `(‖P̃ψ‖, det P)`
pub fn dirac_residual<T: Real>(p: &HermitianMatrix2<T>, psi: &Spinor2<T>) -> (T, T) {
    let (v, det) = dirac_defect(p, psi);
    ((v[0].norm_sq() + v[1].norm_sq()).sqrt(), det)
}

fn spinor_outer<T: Scalar>(psi: &Spinor2<T>) -> HermitianMatrix2<T> {
    HermitianMatrix2::outer(psi)
}

/// `(P, ψ, n)`, the three blocks of `𝓟`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BlockMatrix<T> {
    pub p: HermitianMatrix2<T>,
    pub psi: Spinor2<T>,
    pub n: T,
}

/// The blocks of `𝓟*𝓟`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StarBlocks<T> {
    /// `tilde(ψψ†) − nP̃`
    pub top_left: HermitianMatrix2<T>,
    /// `P̃ψ`
    pub off_diagonal: Spinor2<T>,
    /// `det P`
    pub corner: T,
}

impl<T: Scalar> BlockMatrix<T> {
    pub fn new(p: HermitianMatrix2<T>, psi: Spinor2<T>, n: T) -> Self {
        BlockMatrix { p, psi, n }
    }

    /// `ψ = θξ, P = θθ†, n = |ξ|²` without checking `θ`.
    pub fn from_theta(theta: &Spinor2<T>, xi: &Octonion<T>) -> Self {
        BlockMatrix {
            p: HermitianMatrix2::outer(theta),
            psi: [theta[0].mul(xi), theta[1].mul(xi)],
            n: xi.norm_sq(),
        }
    }

    pub fn to_matrix(&self) -> HermitianMatrix3<T> {
        HermitianMatrix3::new([self.p.d1, self.p.d2, self.n], self.p.a, self.psi[0], self.psi[1])
    }

    pub fn from_matrix(m: &HermitianMatrix3<T>) -> Self {
        BlockMatrix {
            p: HermitianMatrix2::new(m.diag[0], m.diag[1], m.o12),
            psi: [m.o13, m.o23],
            n: m.diag[2],
        }
    }

    pub fn star_blocks(&self) -> StarBlocks<T> {
        let pt = self.p.trace_reversed();
        StarBlocks {
            top_left: spinor_outer(&self.psi).trace_reversed().sub(&pt.scale(self.n)),
            off_diagonal: pt.mul_vec(&self.psi),
            corner: self.p.det(),
        }
    }
}

impl<T: Real> StarBlocks<T> {
    pub fn max_abs(&self) -> T {
        self.top_left
            .max_abs()
            .max(self.off_diagonal[0].max_abs())
            .max(self.off_diagonal[1].max_abs())
            .max(self.corner.abs())
    }
}

/// `ψ = θξ, P = θθ†, n = |ξ|²`. The components of `θ` must commute, i.e.
/// lie in one complex subalgebra, for `𝓟*𝓟 = 0` to hold.
pub fn solve_from_theta<T: Real>(theta: &Spinor2<T>, xi: &Octonion<T>) -> Result<BlockMatrix<T>> {
    let scale = theta[0].norm_sq() + theta[1].norm_sq();
    let c = commutator(&theta[0], &theta[1]).norm();
    if c > T::lit(COPLANAR_TOL) * scale.max(T::one()) {
        return Err(Error::NotCoplanar {
            residual: c.to_f64_lossy(),
        });
    }
    Ok(BlockMatrix::from_theta(theta, xi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    EUp,
    EDown,
    EUpBar,
    EDownBar,
    Nu,
    Sterile,
}

impl Label {
    pub fn is_massless(self) -> bool {
        matches!(self, Label::Nu | Label::Sterile)
    }

    pub fn name(self) -> &'static str {
        match self {
            Label::EUp => "e_up",
            Label::EDown => "e_down",
            Label::EUpBar => "e_up_bar",
            Label::EDownBar => "e_down_bar",
            Label::Nu => "nu",
            Label::Sterile => "sterile",
        }
    }
}

/// Generations are labelled by the quaternionic units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Generation {
    I,
    J,
    K,
}

impl Generation {
    pub const ALL: [Generation; 3] = [Generation::I, Generation::J, Generation::K];

    pub fn unit(self) -> Unit {
        match self {
            Generation::I => Unit::I,
            Generation::J => Unit::J,
            Generation::K => Unit::K,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiracStateBundle<T> {
    pub label: Label,
    pub generation: Option<Generation>,
    pub theta: Spinor2<T>,
    pub xi: Octonion<T>,
}

impl<T> DiracStateBundle<T> {
    /// `e_up/j`, or just `sterile`.
    pub fn tag(&self) -> String {
        match self.generation {
            Some(g) => format!("{}/{}", self.label.name(), g.unit().name()),
            None => self.label.name().to_string(),
        }
    }
}

impl<T: Scalar> DiracStateBundle<T> {
    pub fn block(&self) -> BlockMatrix<T> {
        BlockMatrix::from_theta(&self.theta, &self.xi)
    }

    pub fn momentum(&self) -> HermitianMatrix2<T> {
        HermitianMatrix2::outer(&self.theta)
    }
}

/// Three generations of `e↑, e↓, ē↑, ē↓, ν` and one sterile `Ø`, all with
/// `ξ = 1`. Massive states are at rest, the neutrinos move along `z`.
pub fn lepton_spectrum<T: Scalar>() -> Vec<DiracStateBundle<T>> {
    let one = Octonion::one();
    let zero = Octonion::zero();
    let mut out = Vec::with_capacity(16);
    for g in Generation::ALL {
        let u = Octonion::unit(g.unit());
        let states = [
            (Label::EUp, [one, u]),
            (Label::EDown, [-u, one]),
            (Label::EUpBar, [one, -u]),
            (Label::EDownBar, [u, one]),
            (Label::Nu, [zero, u]),
        ];
        out.extend(states.map(|(label, theta)| DiracStateBundle {
            label,
            generation: Some(g),
            theta,
            xi: one,
        }));
    }
    out.push(DiracStateBundle {
        label: Label::Sterile,
        generation: None,
        theta: [zero, one],
        xi: one,
    });
    out
}

/// Transforms a state by a type-I rotation or boost: `θ ↦ Mθ`, so that
/// `P ↦ MPM†`. Also returns `‖M(θθ†)M† − (Mθ)(Mθ)†‖`.
pub fn boost_or_rotate_state<T: Real>(
    state: &DiracStateBundle<T>,
    family: &GeneratorFamily,
    param: T,
) -> Result<(DiracStateBundle<T>, T)> {
    let acts_on_block = matches!(
        family,
        GeneratorFamily::Rotation { block: BlockType::I, .. } | GeneratorFamily::Boost { block: BlockType::I, .. }
    );
    if !acts_on_block {
        return Err(Error::NotTypeI(family.id()));
    }
    let m = build_matrix(family, param)?.entries;
    let apply = |v: &Spinor2<T>| [0, 1].map(|r| m[r][0].mul(&v[0]) + m[r][1].mul(&v[1]));
    let theta = apply(&state.theta);

    let p = state.momentum();
    let p_full = [[Octonion::real(p.d1), p.a], [p.a.conj(), Octonion::real(p.d2)]];
    let mut mp = [[Octonion::zero(); 2]; 2];
    for (r, row) in mp.iter_mut().enumerate() {
        for (c, e) in row.iter_mut().enumerate() {
            *e = m[r][0].mul(&p_full[0][c]) + m[r][1].mul(&p_full[1][c]);
        }
    }
    let entry = |r: usize, c: usize| mp[r][0].mul(&m[c][0].conj()) + mp[r][1].mul(&m[c][1].conj());
    let rotated = HermitianMatrix2::new(entry(0, 0).re(), entry(1, 1).re(), entry(0, 1));
    let residual = rotated.sub(&HermitianMatrix2::outer(&theta)).max_abs();

    Ok((DiracStateBundle { theta, ..*state }, residual))
}
