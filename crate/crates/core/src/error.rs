use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("expected a pure imaginary unit octonion (real part {real}, norm {norm})")]
    NotUnitImaginary { real: f64, norm: f64 },

    #[error("characteristic cubic has a negative discriminant ({discriminant:e}); input is not Hermitian to working precision")]
    ComplexEigenvalues { discriminant: f64 },

    #[error("spinor components do not associate (associator norm {residual:e})")]
    SpinorNotAssociative { residual: f64 },

    #[error("spinor is not normalized (Ψ†Ψ = {norm_sq})")]
    SpinorNotNormalized { norm_sq: f64 },

    #[error("spinor components do not share a complex subalgebra (commutator norm {residual:e})")]
    NotCoplanar { residual: f64 },

    #[error("matrix is not Hermitian (residual {residual:e})")]
    NotHermitian { residual: f64 },

    #[error("family `{0}` acts entrywise or by nesting and has no single matrix")]
    NotSingleMatrix(String),

    #[error("family `{0}` does not act on the preferred 2x2 block")]
    NotTypeI(String),

    #[error("unknown generator family `{0}`")]
    UnknownFamily(String),

    #[error("zero octonion cannot conjugate")]
    ZeroConjugator,

    #[error("finite differences for `{family}` disagree between step h and h/2 (residual {residual:e})")]
    StepInconsistent { family: String, residual: f64 },

    #[error("empty generator set")]
    EmptySpan,

    #[error("malformed matrix: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
