//! Octonions, the exceptional Jordan algebra `H₃(𝕆)`, and an explicit
//! generator catalog for `E₆ = SL(3,𝕆)`.
//!
//! Algebraic types are generic over the coefficient type. The aliases below
//! fix the common choices: `f64` for numerical work, `f32` where memory
//! matters, and `Ratio<i64>` for exact identities.

pub mod dirac;
pub mod error;
pub mod group;
pub mod harness;
pub mod jordan;
pub mod lie;
pub mod octonion;
pub mod scalar;

use num_rational::Rational64;

pub use error::{Error, Result};
pub use jordan::{HermitianMatrix2, HermitianMatrix3, OctonionMatrix3};
pub use octonion::{associator, commutator, Octonion, StructureTable, Unit};
pub use scalar::{Real, Scalar};

pub type Octonion64 = Octonion<f64>;
pub type Octonion32 = Octonion<f32>;
pub type OctonionQ = Octonion<Rational64>;

pub type Albert64 = HermitianMatrix3<f64>;
pub type Albert32 = HermitianMatrix3<f32>;
pub type AlbertQ = HermitianMatrix3<Rational64>;

pub type Momentum64 = HermitianMatrix2<f64>;
pub type MomentumQ = HermitianMatrix2<Rational64>;
