//! Determinant-preserving transformations of `H₃(𝕆)`.

mod family;
mod g2;
mod inner;
mod transform;

pub use family::{
    catalog, g2_families, naive_generators, so8_copy, BlockType, BoostAxis, FamilyKind, G2Class,
    GeneratorFamily, RotationPlane,
};
pub use g2::{class_weights, g2_apply, g2_automorphism, pointing_pairs, OctonionMap, PointingPair};
pub use inner::{
    inner_automorphism, is_valid_conjugator, ConjugationWitness, InnerAutomorphism, INNER_TOL,
};
pub use transform::{
    build_matrix, build_transform, flip, flip_curve, flip_pair, nested_apply, MatrixTransform,
    HERMITICITY_TOL,
};
