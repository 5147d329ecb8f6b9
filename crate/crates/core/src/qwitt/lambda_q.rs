//! `Lambda^q(A)`, the isomorphism `eta(f) = f^q`, the product `star_q` and `L^q`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{QAlgebra, Rational, RatGroupRing, Ring, TruncSeries};
use crate::witt::{witt_mul, FactorList, W0Elem};

/// A series in `Lambda^q(A)`; `q` tags which deformed operations apply.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LambdaQElem<C: Ring = Rational> {
    q: u64,
    pub series: TruncSeries<C>,
}

impl<C: Ring> LambdaQElem<C> {
    pub fn new(q: u64, series: TruncSeries<C>) -> Result<Self> {
        if q < 1 {
            return Err(Error::InvalidArgument("q must be positive".into()));
        }
        Ok(LambdaQElem { q, series })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            Err(Error::MismatchedQ(self.q, other.q))
        } else {
            Ok(())
        }
    }

    /// `+_q`, transported from series multiplication.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(LambdaQElem {
            q: self.q,
            series: self.series.mul(&other.series),
        })
    }
}

/// `eta(f) = f^q`.
pub fn eta<C: Ring>(f: &TruncSeries<C>, q: u64) -> LambdaQElem<C> {
    LambdaQElem {
        q,
        series: f.pow_int(q as i64),
    }
}

/// `eta^(-1)(f) = f^(1/q)`.
pub fn eta_inv<C: QAlgebra>(a: &LambdaQElem<C>) -> TruncSeries<C> {
    a.series.pow(&Rational::new(BigInt::from(1), BigInt::from(a.q)))
}

/// `a star_q b = eta(eta^(-1) a star eta^(-1) b)`.
pub fn star_q<C: QAlgebra>(a: &LambdaQElem<C>, b: &LambdaQElem<C>) -> Result<LambdaQElem<C>> {
    a.check(b)?;
    Ok(eta(&witt_mul(&eta_inv(a), &eta_inv(b)), a.q))
}

/// The unit of `star_q`, `eta([1]) = (1 - t)^(-q)`.
pub fn star_q_one<C: Ring>(q: u64, order: usize) -> LambdaQElem<C> {
    eta(&TruncSeries::geometric(&C::one(), 1, order), q)
}

/// `L^q(e) = prod (1 - alpha t)^(-q n(alpha))` as a factor list.
pub fn lq_factors(e: &W0Elem, q: u64) -> FactorList {
    e.l_factors().pow(&BigInt::from(q))
}

/// `L^q(e)` expanded over `Q[Q/Z]`.
pub fn lq(e: &W0Elem, q: u64, order: usize) -> LambdaQElem<RatGroupRing> {
    eta(&e.l_factors().expand_group_ring(order), q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, QmodZ};
    use proptest::prelude::*;

    fn geo(a: i64, e: i64, n: usize) -> TruncSeries {
        TruncSeries::geometric(&int(a), 1, n).pow_int(e)
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&geo(1, 1, 6), 2).series, geo(1, 2, 6));
        let a = LambdaQElem::new(3, geo(5, 3, 6)).unwrap();
        assert_eq!(eta_inv(&a), geo(5, 1, 6));
    }

    #[test]
    fn star_q_on_generators() {
        let a = LambdaQElem::new(2, geo(2, 2, 8)).unwrap();
        let b = LambdaQElem::new(2, geo(3, 2, 8)).unwrap();
        assert_eq!(star_q(&a, &b).unwrap().series, geo(6, 2, 8));
        assert_eq!(witt_mul(&a.series, &b.series), geo(6, 4, 8));
        assert_eq!(star_q(&a, &star_q_one(2, 8)).unwrap(), a);
        let c = LambdaQElem::new(3, geo(3, 3, 8)).unwrap();
        assert_eq!(star_q(&a, &c), Err(Error::MismatchedQ(2, 3)));
    }

    #[test]
    fn lq_of_simple_classes() {
        let a = QmodZ::new(1, 5);
        let x = RatGroupRing::basis(a);
        let l = lq(&W0Elem::eigenvalue(a, 1), 3, 5);
        assert_eq!(l.series, TruncSeries::geometric(&x, 1, 5).pow_int(3));
        let inv = lq(&W0Elem::eigenvalue(a, -1), 3, 5);
        assert_eq!(inv.series, TruncSeries::linear(&x, 1, 5).pow_int(3));
    }

    fn arb_w0() -> impl Strategy<Value = W0Elem> {
        prop::collection::vec((0i64..6, 1u64..7, -1i64..2), 0..3)
            .prop_map(|v| W0Elem::from_pairs(v.into_iter().map(|(a, b, m)| (QmodZ::new(a, b), m))))
    }

    fn arb_series() -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec((-4i64..5, 1i64..3), 6)
            .prop_map(|v| TruncSeries::from_tail(v.into_iter().map(|(a, b)| crate::exact::rat(a, b)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn lq_is_multiplicative(x in arb_w0(), y in arb_w0(), q in 2u64..4) {
            let lhs = lq(&x.tensor(&y), q, 4);
            let rhs = star_q(&lq(&x, q, 4), &lq(&y, q, 4)).unwrap();
            prop_assert_eq!(lhs, rhs);
            let sum = lq(&x.add(&y), q, 4);
            prop_assert_eq!(sum, lq(&x, q, 4).add(&lq(&y, q, 4)).unwrap());
        }

        #[test]
        fn lq_range_is_qth_powers(x in arb_w0(), q in 2u64..4) {
            prop_assert_eq!(eta_inv(&lq(&x, q, 5)), x.l_factors().expand_group_ring(5));
        }

        #[test]
        fn eta_is_ring_isomorphism(f in arb_series(), g in arb_series(), q in 2u64..6) {
            prop_assert_eq!(eta(&f.mul(&g), q), eta(&f, q).add(&eta(&g, q)).unwrap());
            prop_assert_eq!(eta(&witt_mul(&f, &g), q), star_q(&eta(&f, q), &eta(&g, q)).unwrap());
            prop_assert_eq!(eta_inv(&eta(&f, q)), f);
        }
    }
}
