//! The divisor of `L^q` and its rescaling `delta_q = q^(-1) delta`.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::IntGroupRing;
use crate::qwitt::lambda_q::lq_factors;
use crate::witt::W0Elem;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RescaledDivisor {
    /// `sum q n(alpha) [alpha]`, read off the exponents of `L^q(e)`.
    pub raw: IntGroupRing,
    /// `q^(-1)` times the raw divisor.
    pub rescaled: IntGroupRing,
}

/// Raw divisor of `L^q(e)`.
pub fn raw_divisor(e: &W0Elem, q: u64) -> IntGroupRing {
    lq_factors(e, q).divisor()
}

pub fn delta_q_rescale(e: &W0Elem, q: u64) -> Result<RescaledDivisor> {
    let raw = raw_divisor(e, q);
    let qb = BigInt::from(q);
    let mut rescaled = IntGroupRing::from_terms([]);
    for (a, c) in raw.terms() {
        let (quot, rem) = c.div_rem(&qb);
        if rem != BigInt::from(0) {
            return Err(Error::NotIntegral(format!("{c}/{q}")));
        }
        rescaled.add_term(*a, quot);
    }
    Ok(RescaledDivisor { raw, rescaled })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{QmodZ, Ring};

    #[test]
    fn single_eigenvalue() {
        let a = QmodZ::new(1, 4);
        let r = delta_q_rescale(&W0Elem::eigenvalue(a, 1), 3).unwrap();
        assert_eq!(r.raw, IntGroupRing::term(a, BigInt::from(3)));
        assert_eq!(r.rescaled, IntGroupRing::basis(a));
        let z = delta_q_rescale(&W0Elem::zero(), 3).unwrap();
        assert!(z.raw.is_zero() && z.rescaled.is_zero());
    }

    #[test]
    fn multiplicativity_fails_by_q() {
        let x = W0Elem::eigenvalue(QmodZ::new(1, 3), 1);
        let y = W0Elem::eigenvalue(QmodZ::new(1, 2), 1);
        let q = 5;
        let lhs = raw_divisor(&x, q).mul(&raw_divisor(&y, q));
        assert_eq!(lhs, raw_divisor(&x.tensor(&y), q).mul_int(q as i64));
        assert_ne!(lhs, raw_divisor(&x.tensor(&y), q));
    }
}
