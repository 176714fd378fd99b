//! The exceptional Jordan algebra `H₃(𝕆)`.

mod eigen;
mod h2;
mod hermitian;
mod matrix;
mod spectral;
mod spinor;

pub use eigen::{cubic_real_roots, eigenvalues, DISCRIMINANT_TOL};
pub use h2::HermitianMatrix2;
pub use hermitian::{HermitianMatrix3, ALBERT_DIM};
pub use matrix::OctonionMatrix3;
pub use spectral::{
    spectral_decompose, EigenPair, SpectralDecomposition, SpectralPath, SpectralResiduals,
    DEGENERACY_TOL,
};
pub use spinor::{
    amplitude_squared, op2_membership, spinor_square, transition_probability, CayleySpinor,
    Op2Membership,
};
