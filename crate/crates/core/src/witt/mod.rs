//! The big Witt ring in Witt, ghost and series coordinates, and the `W_0` layer.

pub mod lambda;
pub mod vectors;
pub mod w0;

pub use lambda::{frobenius, teichmuller, verschiebung, witt_add, witt_mul, witt_neg, witt_one};
pub use vectors::{
    artin_hasse, ghost_from_witt, series_from_ghost, series_ghost, series_to_witt, witt_from_ghost, GhostVector,
    WittVector,
};
pub use w0::{w0_l, FactorList, W0Elem};
