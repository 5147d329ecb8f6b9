//! Integral, q-deformed and Habiro Bost–Connes algebras.

pub mod algebra;
pub mod habiro;
pub mod relations;

pub use algebra::{
    bc_mul, bc_normalize, int_scalar, mu_rational, to_habiro, to_rational, to_rational_deformed, BCElem, BCGen,
    HabiroGroupRing,
};
pub use habiro::{habiro_reduce, habiro_sigma, pochhammer, HabiroElem};
pub use relations::{check_relations, RelationCheck};
