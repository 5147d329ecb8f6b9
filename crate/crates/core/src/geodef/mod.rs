//! Geometric deformations of `W_0`: the `q^l`-points and affine-space gradings and their divisors.

pub mod endo;
pub mod graded;

pub use endo::{e_gen, rho_hat, rho_hat_rational, rho_points, sigma_hat, sigma_points, DeformedRatDivisor};
pub use graded::{
    affine_series, deformed_divisor, graded_frobenius, graded_mul, graded_verschiebung, omega, points_series,
    DeformationKind, DeformedDivisor, GradedW0Elem,
};
