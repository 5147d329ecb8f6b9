//! Quantum statistical mechanics of the (q-deformed) Bost–Connes systems.

pub mod brackets;
pub mod covariance;
pub mod partition;
pub mod rep;
pub mod zeta;

pub use brackets::{curly, curly_int, log_curly, log_q_bracket, q_bracket, q_bracket_int, v};
pub use covariance::{
    covariance_check, hamiltonian_eig, sample_basis, CheckReport, QsmSystem, SystemKind, COVARIANCE_TOL,
};
pub use partition::{partition_trace, partition_z, partition_zq_system, SYSTEM_THRESHOLD};
pub use rep::{apply, apply_word, rep_apply, BasisKind, Embedding, Op, RepCoeffs, StateVector, WeightSpec};
pub use zeta::{kappa_prime, riemann_zeta, zeta_q, zeta_q_euler, Evaluation, ZetaMode, ITERATION_CAP};
