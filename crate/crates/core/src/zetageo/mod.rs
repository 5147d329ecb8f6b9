//! Zeta functions of varieties and their necklace decompositions.

pub mod necklace;
pub mod zeta;

pub use necklace::{counts_to_degrees, degrees_to_counts, necklace, necklace_int};
pub use zeta::{
    degrees_integral, q_integer_witt, series_from_provenance, tate_root, zeta_affine, zeta_affine_shift,
    zeta_disjoint_union, zeta_from_counts, zeta_from_degrees, zeta_product, zeta_projective, zeta_symbolic,
    Provenance, QValue, SymbolicFactor, ZetaCoeff, ZetaFunction,
};
