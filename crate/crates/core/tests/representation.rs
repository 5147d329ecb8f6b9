use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

use qbost_core::bcalg::{bc_mul, BCElem};
use qbost_core::exact::{rat, DeformedGenerator, DeformedGroupRing, IntGroupRing, QmodZ};
use qbost_core::qsm::{rep_apply, Embedding, StateVector};

const TOL: f64 = 1e-12;

fn torsion() -> impl Strategy<Value = QmodZ> {
    (1u64..9).prop_flat_map(|b| (0..b as i64).prop_map(move |a| QmodZ::new(a, b)))
}

fn int_elem() -> impl Strategy<Value = BCElem<IntGroupRing>> {
    prop::collection::vec((1u64..5, torsion(), -3i64..4, 1u64..5), 1..3).prop_map(|v| {
        let mut out = BCElem::zero();
        for (a, t, c, b) in v {
            out.add_monomial(a, IntGroupRing::term(t, BigInt::from(c)), b);
        }
        out
    })
}

fn deformed_elem() -> impl Strategy<Value = BCElem<DeformedGroupRing>> {
    prop::collection::vec((1u64..5, 0i64..6, 1i64..4, torsion(), -3i64..4, 1u64..5), 1..3).prop_map(|v| {
        let mut out = BCElem::zero();
        for (a, n, d, t, c, b) in v {
            let g = DeformedGenerator::new(rat(n, d), t);
            out.add_monomial(a, DeformedGroupRing::term(g, BigInt::from(c)), b);
        }
        out
    })
}

fn natural_vector() -> impl Strategy<Value = StateVector> {
    prop::collection::vec((1u64..40, -2.0f64..2.0, -2.0f64..2.0), 1..4).prop_map(|v| {
        let mut out = StateVector::basis(1).scale(Complex64::new(0.0, 0.0));
        for (m, re, im) in v {
            out = out.add(&StateVector::basis(m).scale(Complex64::new(re, im)));
        }
        out
    })
}

fn deformed_vector() -> impl Strategy<Value = StateVector> {
    prop::collection::vec((1u64..40, 0i64..6, 1i64..4, -2.0f64..2.0), 1..4).prop_map(|v| {
        let mut out = StateVector::basis_deformed(1, rat(0, 1)).scale(Complex64::new(0.0, 0.0));
        for (m, n, d, re) in v {
            out = out.add(&StateVector::basis_deformed(m, rat(n, d)).scale(Complex64::new(re, 0.0)));
        }
        out
    })
}

fn scale(v: &StateVector) -> f64 {
    v.terms().map(|(_, _, c)| c.norm()).fold(1.0, f64::max)
}

proptest! {
    #[test]
    fn integral_representation_is_multiplicative(x in int_elem(), y in int_elem(), v in natural_vector()) {
        let emb = Embedding::default();
        let lhs = rep_apply(&bc_mul(&x, &y), &v, &emb).unwrap();
        let rhs = rep_apply(&x, &rep_apply(&y, &v, &emb).unwrap(), &emb).unwrap();
        prop_assert!(lhs.distance(&rhs) < TOL * scale(&lhs).max(scale(&rhs)));
    }

    #[test]
    fn deformed_representation_is_multiplicative(x in deformed_elem(), y in deformed_elem(), v in deformed_vector()) {
        let emb = Embedding::default();
        let lhs = rep_apply(&bc_mul(&x, &y), &v, &emb).unwrap();
        let rhs = rep_apply(&x, &rep_apply(&y, &v, &emb).unwrap(), &emb).unwrap();
        prop_assert!(lhs.distance(&rhs) < TOL * scale(&lhs).max(scale(&rhs)));
    }

    #[test]
    fn twisted_embedding_is_multiplicative(x in int_elem(), y in int_elem(), v in natural_vector()) {
        let emb = Embedding { alpha: 11 * 13 * 17 };
        let lhs = rep_apply(&bc_mul(&x, &y), &v, &emb).unwrap();
        let rhs = rep_apply(&x, &rep_apply(&y, &v, &emb).unwrap(), &emb).unwrap();
        prop_assert!(lhs.distance(&rhs) < TOL * scale(&lhs).max(scale(&rhs)));
    }
}

#[test]
fn identity_acts_trivially() {
    let v = StateVector::basis(6).add(&StateVector::basis(10).scale(Complex64::new(0.0, 2.0)));
    let one = BCElem::<IntGroupRing>::one();
    assert!(rep_apply(&one, &v, &Embedding::default()).unwrap().distance(&v) < TOL);
}
