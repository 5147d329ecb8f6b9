//! Necklace numbers `M(x, r) = (1/r) sum_{d | r} mu(d) x^(r/d)` and point-count/degree conversions.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::arith::{divisors, mobius};
use crate::exact::QAlgebra;

/// `M(x, r)` over any Q-algebra (integers, rationals, or polynomials in `q`).
pub fn necklace<C: QAlgebra>(x: &C, r: u64) -> C {
    assert!(r >= 1, "necklace index must be positive");
    let mut s = C::zero();
    for d in divisors(r) {
        let mu = mobius(d);
        if mu != 0 {
            s = s.add(&x.pow(r / d).mul_int(mu));
        }
    }
    s.div_int(r as i64)
}

/// `M(x, r)` for an integer `x`; always integral.
pub fn necklace_int(x: &BigInt, r: u64) -> Result<BigInt> {
    assert!(r >= 1, "necklace index must be positive");
    let mut s = BigInt::from(0);
    for d in divisors(r) {
        let mu = mobius(d);
        if mu != 0 {
            s += x.pow((r / d) as u32) * mu;
        }
    }
    let (q, rem) = s.div_rem(&BigInt::from(r));
    if rem != BigInt::from(0) {
        return Err(Error::NotIntegral(format!("{s}/{r}")));
    }
    Ok(q)
}

/// `a_r = (1/r) sum_{d | r} mu(d) N_(r/d)`.
pub fn counts_to_degrees<C: QAlgebra>(counts: &[C]) -> Vec<C> {
    (1..=counts.len() as u64)
        .map(|r| {
            let mut s = C::zero();
            for d in divisors(r) {
                let mu = mobius(d);
                if mu != 0 {
                    s = s.add(&counts[(r / d - 1) as usize].mul_int(mu));
                }
            }
            s.div_int(r as i64)
        })
        .collect()
}

/// `N_m = sum_{r | m} r a_r`.
pub fn degrees_to_counts<C: QAlgebra>(degrees: &[C]) -> Vec<C> {
    (1..=degrees.len() as u64)
        .map(|m| {
            divisors(m)
                .into_iter()
                .fold(C::zero(), |acc, r| acc.add(&degrees[(r - 1) as usize].mul_int(r as i64)))
        })
        .collect()
}
