//! Octonion arithmetic.
//!
//! Coefficients are stored in the basis order
//! `(1, i, j, k, kℓ, jℓ, iℓ, ℓ)`. The multiplication table comes from
//! Cayley–Dickson doubling of the quaternions with
//! `(a + bℓ)(c + dℓ) = (ac − d̄b) + (da + bc̄)ℓ`, precomputed once into a
//! signed-index table so that a product is a plain 64-term bilinear sum.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Product of two basis elements: `e_a e_b = sign · e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: u8,
}

// Quaternion basis (1, i, j, k) products.
const QUAT: [[(i8, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

const fn quat_conj_sign(q: usize) -> i8 {
    if q == 0 {
        1
    } else {
        -1
    }
}

/// Octonion index `4..8` holds the ℓ-half; `kℓ, jℓ, iℓ, ℓ` carry the
/// quaternion units `k, j, i, 1`.
const fn split(index: usize) -> (bool, usize) {
    if index < 4 {
        (false, index)
    } else {
        (true, 7 - index)
    }
}

const fn join(ell: bool, q: usize) -> usize {
    if ell {
        7 - q
    } else {
        q
    }
}

const fn doubled_product(a: usize, b: usize) -> BasisProduct {
    let (a_ell, q) = split(a);
    let (b_ell, r) = split(b);
    let (sign, ell, idx) = match (a_ell, b_ell) {
        // q · r
        (false, false) => {
            let (s, i) = QUAT[q][r];
            (s, false, i)
        }
        // q · (rℓ) = (r q)ℓ
        (false, true) => {
            let (s, i) = QUAT[r][q];
            (s, true, i)
        }
        // (qℓ) · r = (q r̄)ℓ
        (true, false) => {
            let (s, i) = QUAT[q][r];
            (s * quat_conj_sign(r), true, i)
        }
        // (qℓ)(rℓ) = −r̄ q
        (true, true) => {
            let (s, i) = QUAT[r][q];
            (-s * quat_conj_sign(r), false, i)
        }
    };
    BasisProduct {
        sign,
        index: join(ell, idx) as u8,
    }
}

const fn build_table() -> [[BasisProduct; 8]; 8] {
    let mut t = [[BasisProduct { sign: 0, index: 0 }; 8]; 8];
    let mut a = 0;
    while a < 8 {
        let mut b = 0;
        while b < 8 {
            t[a][b] = doubled_product(a, b);
            b += 1;
        }
        a += 1;
    }
    t
}

static TABLE: StructureTable = StructureTable {
    products: build_table(),
};

/// Signed multiplication table of the octonion basis.
#[derive(Debug)]
pub struct StructureTable {
    products: [[BasisProduct; 8]; 8],
}

impl StructureTable {
    pub fn get() -> &'static StructureTable {
        &TABLE
    }

    /// Product of basis elements by coefficient index (0 is the real unit).
    pub fn basis(&self, a: usize, b: usize) -> BasisProduct {
        self.products[a][b]
    }

    /// `u v = sign · w`, with `w = None` standing for the real unit.
    pub fn units(&self, u: Unit, v: Unit) -> (i8, Option<Unit>) {
        let p = self.products[u.index()][v.index()];
        (p.sign, Unit::from_index(p.index as usize))
    }
}

impl fmt::Display for StructureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4}", "")?;
        for v in Unit::ALL {
            write!(f, "{:>5}", v.symbol())?;
        }
        writeln!(f)?;
        for u in Unit::ALL {
            write!(f, "{:>4}", u.symbol())?;
            for v in Unit::ALL {
                let (sign, w) = self.units(u, v);
                let s = if sign < 0 { "-" } else { "+" };
                let name = w.map_or("1", Unit::symbol);
                write!(f, "{:>5}", format!("{s}{name}"))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// One of the seven imaginary basis units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    I = 1,
    J = 2,
    K = 3,
    KL = 4,
    JL = 5,
    IL = 6,
    L = 7,
}

impl Unit {
    pub const ALL: [Unit; 7] = [
        Unit::I,
        Unit::J,
        Unit::K,
        Unit::KL,
        Unit::JL,
        Unit::IL,
        Unit::L,
    ];

    /// Coefficient position, 1..=7.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Unit> {
        Unit::ALL.get(index.checked_sub(1)?).copied()
    }

    /// ASCII name used in identifiers: `i j k kl jl il l`.
    pub fn name(self) -> &'static str {
        match self {
            Unit::I => "i",
            Unit::J => "j",
            Unit::K => "k",
            Unit::KL => "kl",
            Unit::JL => "jl",
            Unit::IL => "il",
            Unit::L => "l",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Unit::I => "i",
            Unit::J => "j",
            Unit::K => "k",
            Unit::KL => "kℓ",
            Unit::JL => "jℓ",
            Unit::IL => "iℓ",
            Unit::L => "ℓ",
        }
    }

    pub fn parse(name: &str) -> Option<Unit> {
        Unit::ALL
            .into_iter()
            .find(|u| u.name() == name || u.symbol() == name)
    }
}

impl Serialize for Unit {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion<T> {
    pub coeffs: [T; 8],
}

impl<T: Scalar> Octonion<T> {
    pub const fn new(coeffs: [T; 8]) -> Self {
        Octonion { coeffs }
    }

    pub fn zero() -> Self {
        Octonion::new([T::zero(); 8])
    }

    pub fn one() -> Self {
        Octonion::real(T::one())
    }

    pub fn real(x: T) -> Self {
        let mut c = [T::zero(); 8];
        c[0] = x;
        Octonion::new(c)
    }

    /// Basis element by coefficient index.
    pub fn basis(index: usize) -> Self {
        let mut c = [T::zero(); 8];
        c[index] = T::one();
        Octonion::new(c)
    }

    pub fn unit(u: Unit) -> Self {
        Octonion::basis(u.index())
    }

    /// `x + y u`.
    pub fn complex(x: T, y: T, u: Unit) -> Self {
        let mut c = [T::zero(); 8];
        c[0] = x;
        c[u.index()] = y;
        Octonion::new(c)
    }

    pub fn re(&self) -> T {
        self.coeffs[0]
    }

    pub fn im(&self) -> Self {
        let mut c = self.coeffs;
        c[0] = T::zero();
        Octonion::new(c)
    }

    pub fn conj(&self) -> Self {
        let mut c = self.coeffs.map(|x| -x);
        c[0] = self.coeffs[0];
        Octonion::new(c)
    }

    pub fn norm_sq(&self) -> T {
        self.dot(self)
    }

    /// Euclidean inner product `Re(a b̄)`.
    pub fn dot(&self, other: &Self) -> T {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(T::zero(), |acc, (&x, &y)| acc + x * y)
    }

    pub fn scale(&self, s: T) -> Self {
        Octonion::new(self.coeffs.map(|x| x * s))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let table = StructureTable::get();
        let mut out = [T::zero(); 8];
        for (a, &x) in self.coeffs.iter().enumerate() {
            if x == T::zero() {
                continue;
            }
            for (b, &y) in rhs.coeffs.iter().enumerate() {
                let p = table.basis(a, b);
                let slot = &mut out[p.index as usize];
                if p.sign > 0 {
                    *slot = *slot + x * y;
                } else {
                    *slot = *slot - x * y;
                }
            }
        }
        Octonion::new(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == T::zero())
    }
}

impl<T: Real> Octonion<T> {
    pub fn norm(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, &x| acc.hypot(x))
    }

    /// `ā / |a|²`, or `None` for zero, the only non-invertible octonion.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n == T::zero() {
            None
        } else {
            Some(self.conj().scale(T::one() / n))
        }
    }

    pub fn norm_inverse(&self) -> (T, Option<Self>) {
        (self.norm(), self.inverse())
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, &x| m.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|x| x.is_finite())
    }

    /// `e^{ŝθ} = cos θ + ŝ sin θ` for a pure imaginary unit `ŝ`.
    pub fn exp_unit(s: &Self, theta: T) -> Result<Self> {
        let tol = T::lit(1e-12);
        let n = s.norm();
        if s.re().abs() > tol || (n - T::one()).abs() > tol {
            return Err(Error::NotUnitImaginary {
                real: s.re().to_f64_lossy(),
                norm: n.to_f64_lossy(),
            });
        }
        Ok(Self::exp_unit_unchecked(s, theta))
    }

    pub(crate) fn exp_unit_unchecked(s: &Self, theta: T) -> Self {
        let mut out = s.scale(theta.sin());
        out.coeffs[0] = theta.cos();
        out
    }

    /// `e^{uθ}` for a basis unit.
    pub fn exp_basis(u: Unit, theta: T) -> Self {
        Octonion::complex(theta.cos(), theta.sin(), u)
    }

    /// Polar form `a = r e^{ŝθ}` with `θ ∈ [0, π]`. For real `a` the
    /// direction is arbitrary and `i` is returned.
    pub fn polar(&self) -> (T, Self, T) {
        let r = self.norm();
        let im = self.im();
        let m = im.norm();
        let theta = m.atan2(self.re());
        let s = if m > T::zero() {
            im.scale(T::one() / m)
        } else {
            Octonion::unit(Unit::I)
        };
        (r, s, theta)
    }
}

impl<T> Index<usize> for Octonion<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.coeffs[i]
    }
}

impl<T: Scalar> Add for Octonion<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.coeffs;
        for (x, y) in c.iter_mut().zip(rhs.coeffs) {
            *x = *x + y;
        }
        Octonion::new(c)
    }
}

impl<T: Scalar> Sub for Octonion<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut c = self.coeffs;
        for (x, y) in c.iter_mut().zip(rhs.coeffs) {
            *x = *x - y;
        }
        Octonion::new(c)
    }
}

impl<T: Scalar> AddAssign for Octonion<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Scalar> SubAssign for Octonion<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<T: Scalar> Neg for Octonion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Octonion::new(self.coeffs.map(|x| -x))
    }
}

impl<T: Scalar> std::ops::Mul for Octonion<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Octonion::mul(&self, &rhs)
    }
}

impl<T: Scalar> std::ops::Mul for &Octonion<T> {
    type Output = Octonion<T>;
    fn mul(self, rhs: Self) -> Octonion<T> {
        Octonion::mul(self, rhs)
    }
}

/// `[a, b] = ab − ba`
pub fn commutator<T: Scalar>(a: &Octonion<T>, b: &Octonion<T>) -> Octonion<T> {
    a.mul(b) - b.mul(a)
}

/// `[a, b, c] = (ab)c − a(bc)`
pub fn associator<T: Scalar>(a: &Octonion<T>, b: &Octonion<T>, c: &Octonion<T>) -> Octonion<T> {
    a.mul(b).mul(c) - a.mul(&b.mul(c))
}

impl<T: Real> fmt::Display for Octonion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (idx, &x) in self.coeffs.iter().enumerate() {
            if x == T::zero() {
                continue;
            }
            let name = Unit::from_index(idx).map_or("", Unit::symbol);
            if wrote {
                let sign = if x < T::zero() { '-' } else { '+' };
                write!(f, " {sign} {}{name}", x.abs())?;
            } else {
                write!(f, "{x}{name}")?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}
