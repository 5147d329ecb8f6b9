//! Partition functions of the q-deformed systems.

use crate::error::{Error, Result};
use crate::exact::arith::first_primes;
use crate::qsm::brackets::log_q_bracket;
use crate::qsm::zeta::{riemann_zeta, zeta_q, Evaluation, ZetaMode};

/// Convergence threshold in `beta` for [`partition_zq_system`].
pub const SYSTEM_THRESHOLD: f64 = 1.5;

/// `Z(beta) = sum {n}_q^(-beta)`; `q = 1` gives the Riemann zeta function.
pub fn partition_z(beta: f64, q: f64, tol: f64) -> Result<Evaluation> {
    if beta.is_nan() || beta <= 1.0 {
        return Err(Error::Divergent {
            what: "partition function".into(),
            value: beta,
            threshold: 1.0,
        });
    }
    if q == 1.0 {
        return Ok(Evaluation {
            value: riemann_zeta(beta),
            error_bound: 1e-14,
            iterations: 20,
            converged: true,
        });
    }
    zeta_q(beta, q, ZetaMode::for_q(q), tol)
}

/// `Z_q(beta) = sum_n zeta_q(n beta) n^(-beta)` summed over `n <= terms`.
///
/// Written as `zeta(beta) + sum_n n^(-beta) (zeta_q(n beta) - 1)`; the tail uses
/// `zeta_q(x) - 1 <= zeta(x) - 1 <= 2^(-x) + 2^(1-x)/(x-1)`.
pub fn partition_zq_system(beta: f64, q: f64, terms: usize, tol: f64) -> Result<Evaluation> {
    if beta.is_nan() || beta <= SYSTEM_THRESHOLD {
        return Err(Error::Divergent {
            what: "partition_Zq_system".into(),
            value: beta,
            threshold: SYSTEM_THRESHOLD,
        });
    }
    if q <= 1.0 {
        return Err(Error::InvalidArgument(format!("q must exceed 1, got {q}")));
    }
    if terms == 0 {
        return Err(Error::InvalidArgument("at least one term is required".into()));
    }
    let each = tol / (2.0 * terms as f64);
    let mut value = riemann_zeta(beta);
    let mut bound = 1e-14;
    let mut iterations = 0;
    for n in 1..=terms {
        let z = zeta_q(n as f64 * beta, q, ZetaMode::BigQ, each)?;
        let w = (n as f64).powf(-beta);
        value += w * (z.value - 1.0);
        bound += w * z.error_bound;
        iterations += z.iterations;
    }
    let m = terms as f64 + 1.0;
    let x = m * beta;
    let tail = m.powf(-beta) * (1.0 + 2.0 / (x - 1.0)) * 2f64.powf(-x) / (1.0 - 2f64.powf(-beta));
    bound += tail;
    Ok(Evaluation {
        value,
        error_bound: bound,
        iterations,
        converged: bound <= tol,
    })
}

/// The trace `sum_(m <= M) m^(-beta) prod_(k <= K) sum_(l <= L) [p_k]_q^(-beta m l)` over a finite spectrum.
pub fn partition_trace(beta: f64, q: f64, m_max: u64, k_max: usize, l_max: u64) -> f64 {
    let primes = first_primes(k_max);
    let mut total = 0.0;
    for m in 1..=m_max {
        let mut prod = 1.0;
        for &p in &primes {
            let x = (-beta * m as f64 * log_q_bracket(p, q)).exp();
            prod *= (0..=l_max).map(|l| x.powi(l as i32)).sum::<f64>();
        }
        total += (m as f64).powf(-beta) * prod;
    }
    total
}
