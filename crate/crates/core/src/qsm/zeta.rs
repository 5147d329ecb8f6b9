//! `zeta_q(s)` by Dirichlet series and by Euler product, each with a rigorous tail bound.
//!
//! Tails use `{n}_q >= n^k'`. For `p` in `[2^j, 2^(j+1))`, `[p]_q >= [2^j]_q >= (1+q)^j`,
//! so `[p]_q >= p^(kappa j/(j+1))` with `kappa = log2(1+q)`; below `2^J` the ratio
//! `log [p]_q / log p` is computed directly.

use crate::error::{Error, Result};
use crate::exact::arith::{primes_up_to, smallest_prime_factors};
use crate::qsm::brackets::log_q_bracket;

/// Largest number of Dirichlet terms or Euler factors evaluated.
pub const ITERATION_CAP: usize = 1 << 23;

const KAPPA_SIEVE_BITS: u32 = 18;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZetaMode {
    /// `q < 1`: `sum q^(s v(n)) / {n}_q^s`.
    SmallQ,
    /// `q > 1`: `sum {n}_q^(-s)`.
    BigQ,
}

impl ZetaMode {
    pub fn for_q(q: f64) -> Self {
        if q < 1.0 {
            ZetaMode::SmallQ
        } else {
            ZetaMode::BigQ
        }
    }
}

/// A numerical value with a bound on its distance to the true value.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Evaluation {
    pub value: f64,
    pub error_bound: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Neumaier summation.
struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    fn new(x: f64) -> Self {
        Compensated { sum: x, comp: 0.0 }
    }

    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `zeta(s)` for real `s > 1` by Euler–Maclaurin summation.
pub fn riemann_zeta(s: f64) -> f64 {
    assert!(s > 1.0);
    const B: [f64; 10] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
    ];
    let n = 20.0f64;
    let mut sum: f64 = (1..20).map(|k| (k as f64).powf(-s)).sum();
    sum += n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);
    let mut rising = s;
    let mut fact = 2.0;
    for (k, b) in B.iter().enumerate() {
        let k = k + 1;
        sum += b / fact * rising * n.powf(-s - 2.0 * k as f64 + 1.0);
        rising *= (s + 2.0 * k as f64 - 1.0) * (s + 2.0 * k as f64);
        fact *= (2.0 * k as f64 + 1.0) * (2.0 * k as f64 + 2.0);
    }
    sum
}

fn check(s: f64, q: f64, mode: ZetaMode) -> Result<f64> {
    if s.is_nan() || s <= 1.0 {
        return Err(Error::Divergent {
            what: "zeta_q".into(),
            value: s,
            threshold: 1.0,
        });
    }
    match mode {
        ZetaMode::BigQ if q > 1.0 => Ok(q),
        ZetaMode::SmallQ if q > 0.0 && q < 1.0 => Ok(1.0 / q),
        _ => Err(Error::InvalidArgument(format!("q = {q} does not match mode {mode:?}"))),
    }
}

/// An exponent `k'` with `{n}_q >= n^k'` for all `n`, valid for `q > 1`.
pub fn kappa_prime(q: f64) -> f64 {
    assert!(q > 1.0);
    let j = KAPPA_SIEVE_BITS as f64;
    let kappa = (1.0 + q).log2();
    let mut k = kappa * j / (j + 1.0);
    for p in primes_up_to(1 << KAPPA_SIEVE_BITS) {
        k = k.min(log_q_bracket(p, q) / (p as f64).ln());
    }
    k
}

/// `sum_(n > N) n^(-a) <= N^(1-a)/(a-1)`.
fn power_tail(n: f64, a: f64) -> f64 {
    n.powf(1.0 - a) / (a - 1.0)
}

/// Smallest `N` with `power_tail(N, a) <= eps`, capped.
fn cutoff(a: f64, eps: f64) -> usize {
    let n = (eps * (a - 1.0)).powf(1.0 / (1.0 - a)).ceil();
    if n.is_finite() && n < ITERATION_CAP as f64 {
        (n as usize).max(16)
    } else {
        ITERATION_CAP
    }
}

/// Dirichlet series, summed in ascending `n`.
pub fn zeta_q(s: f64, q: f64, mode: ZetaMode, tol: f64) -> Result<Evaluation> {
    let q_eff = check(s, q, mode)?;
    let a = s * kappa_prime(q_eff);
    if a <= 1.0 {
        return Err(Error::InvalidArgument(format!("tail exponent {a} too small for s = {s}")));
    }
    let n = cutoff(a, tol / 2.0);
    let spf = smallest_prime_factors(n);
    let ln_q = q.ln();
    let mut log_curly = vec![0.0f64; n + 1];
    let mut nu = vec![0u64; n + 1];
    let mut sum = Compensated::new(1.0);
    let mut rounding = 0.0;
    let log_n = (n as f64).log2();
    for m in 2..=n {
        let p = spf[m] as usize;
        let lb = if p == m {
            log_q_bracket(p as u64, q)
        } else {
            log_curly[p]
        };
        log_curly[m] = log_curly[m / p] + lb;
        nu[m] = nu[m / p] + p as u64 - 1;
        let e = match mode {
            ZetaMode::BigQ => -s * log_curly[m],
            ZetaMode::SmallQ => s * (nu[m] as f64 * ln_q - log_curly[m]),
        };
        let term = e.exp();
        sum.add(term);
        // relative error of one term: the accumulated logarithm, then exp
        rounding += term * f64::EPSILON * (s * log_curly[m] * log_n + s * nu[m] as f64 * ln_q.abs() + 4.0);
    }
    let value = sum.value();
    let tail = power_tail(n as f64, a);
    let rounding = rounding + 4.0 * f64::EPSILON * value;
    Ok(Evaluation {
        value,
        error_bound: tail + rounding,
        iterations: n,
        converged: tail + rounding <= tol,
    })
}

/// Euler product over primes in ascending order.
pub fn zeta_q_euler(s: f64, q: f64, mode: ZetaMode, tol: f64) -> Result<Evaluation> {
    let q_eff = check(s, q, mode)?;
    let a = s * kappa_prime(q_eff);
    if a <= 1.0 {
        return Err(Error::InvalidArgument(format!("tail exponent {a} too small for s = {s}")));
    }
    let upper = riemann_zeta(a);
    // value * expm1(T) <= tol/2 with T = tail/(1 - 2^-a) and value <= zeta(a)
    let t_max = (tol / (2.0 * upper)).ln_1p() * (1.0 - 2f64.powf(-a));
    let big_p = cutoff(a, t_max);
    let ln_q = q.ln();
    let mut log_value = Compensated::new(0.0);
    let mut log_err = 0.0;
    for p in primes_up_to(big_p) {
        let e = match mode {
            ZetaMode::BigQ => -s * log_q_bracket(p, q),
            ZetaMode::SmallQ => s * ((p - 1) as f64 * ln_q - log_q_bracket(p, q)),
        };
        let x = e.exp();
        let t = -(-x).ln_1p();
        log_value.add(t);
        log_err += t * f64::EPSILON * (e.abs() + 4.0);
    }
    let log_value = log_value.value();
    let log_err = log_err + 4.0 * f64::EPSILON * log_value.abs();
    let value = log_value.exp();
    let big_t = power_tail(big_p as f64, a) / (1.0 - (big_p as f64 + 1.0).powf(-a));
    let bound = value * (big_t + log_err).exp_m1() + value * log_err.exp_m1() + 2.0 * f64::EPSILON * value;
    Ok(Evaluation {
        value,
        error_bound: bound,
        iterations: big_p,
        converged: bound <= tol,
    })
}
