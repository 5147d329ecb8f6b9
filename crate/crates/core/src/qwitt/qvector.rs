//! The q-deformed Witt vectors `W^q(A)`, whose ring structure is transported through `Phi^q`.

use crate::error::{Error, Result};
use crate::exact::arith::divisors;
use crate::exact::{QAlgebra, Rational, Ring};
use crate::witt::GhostVector;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QWittVector {
    q: u64,
    pub x: Vec<Rational>,
}

/// `g_n = sum_{d | n} d q^(n/d - 1) x_d^(n/d)`; at `q = 1` this is the ordinary ghost map.
pub fn qghost_components<C: Ring>(x: &[C], q: u64) -> Vec<C> {
    let qc = C::from_i64(q as i64);
    (1..=x.len())
        .map(|n| {
            divisors(n as u64).into_iter().fold(C::zero(), |acc, d| {
                let d = d as usize;
                let k = (n / d) as u64;
                let term = x[d - 1].pow(k).mul(&qc.pow(k - 1)).mul_int(d as i64);
                acc.add(&term)
            })
        })
        .collect()
}

/// Inverse of [`qghost_components`], by recursion on `n`.
pub fn from_qghost_components<C: QAlgebra>(g: &[C], q: u64) -> Vec<C> {
    let qc = C::from_i64(q as i64);
    let mut x: Vec<C> = Vec::with_capacity(g.len());
    for n in 1..=g.len() {
        let mut s = g[n - 1].clone();
        for d in divisors(n as u64) {
            let d = d as usize;
            if d < n {
                let k = (n / d) as u64;
                s = s.sub(&x[d - 1].pow(k).mul(&qc.pow(k - 1)).mul_int(d as i64));
            }
        }
        x.push(s.div_int(n as i64));
    }
    x
}

impl QWittVector {
    pub fn new(q: u64, x: Vec<Rational>) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidArgument(format!("q must be at least 2, got {q}")));
        }
        Ok(QWittVector { q, x })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn order(&self) -> usize {
        self.x.len()
    }

    pub fn qghost(&self) -> GhostVector {
        GhostVector::new(qghost_components(&self.x, self.q))
    }

    pub fn from_qghost(q: u64, g: &GhostVector) -> Result<Self> {
        Self::new(q, from_qghost_components(&g.g, q))
    }

    pub fn zero(q: u64, order: usize) -> Result<Self> {
        Self::new(q, vec![<Rational as Ring>::zero(); order])
    }

    /// The unit: the preimage of the all-ones ghost vector.
    pub fn one(q: u64, order: usize) -> Result<Self> {
        Self::from_qghost(q, &GhostVector::new(vec![<Rational as Ring>::one(); order]))
    }

    fn check(&self, other: &Self) -> Result<usize> {
        if self.q != other.q {
            return Err(Error::MismatchedQ(self.q, other.q));
        }
        Ok(self.order().min(other.order()))
    }

    fn combine(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        let n = self.check(other)?;
        let a = self.qghost();
        let b = other.qghost();
        let g: Vec<Rational> = (0..n).map(|i| op(&a.g[i], &b.g[i])).collect();
        Self::from_qghost(self.q, &GhostVector::new(g))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a * b)
    }

    pub fn neg(&self) -> Self {
        let g: Vec<Rational> = self.qghost().g.iter().map(|a| -a).collect();
        Self::from_qghost(self.q, &GhostVector::new(g)).expect("q already validated")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::witt::{ghost_from_witt, WittVector};
    use proptest::prelude::*;

    fn v(q: u64, xs: &[i64]) -> QWittVector {
        QWittVector::new(q, xs.iter().map(|&a| int(a)).collect()).unwrap()
    }

    #[test]
    fn qghost_examples() {
        assert_eq!(v(2, &[1, 0, 0, 0]).qghost().g, vec![int(1), int(2), int(4), int(8)]);
        assert_eq!(v(2, &[1, 1, 0]).qghost().g, vec![int(1), int(4), int(4)]);
        let x = vec![rat(1, 2), int(3), rat(-2, 3), int(5)];
        assert_eq!(qghost_components(&x, 1), ghost_from_witt(&WittVector::new(x.clone())).g);
    }

    #[test]
    fn transported_arithmetic() {
        let x = v(3, &[2, -1, 4, 0]);
        assert_eq!(x.add(&QWittVector::zero(3, 4).unwrap()).unwrap(), x);
        assert_eq!(x.mul(&QWittVector::one(3, 4).unwrap()).unwrap(), x);
        let y = v(2, &[1, 0]);
        let s = y.add(&y).unwrap();
        assert_eq!(s.qghost().g, vec![int(2), int(4)]);
        assert_eq!(s, v(2, &[2, -2]));
        assert_eq!(x.add(&y), Err(Error::MismatchedQ(3, 2)));
        assert!(QWittVector::new(1, vec![]).is_err());
    }

    fn arb(q: u64) -> impl Strategy<Value = QWittVector> {
        prop::collection::vec((-5i64..6, 1i64..4), 6)
            .prop_map(move |v| QWittVector::new(q, v.into_iter().map(|(a, b)| rat(a, b)).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn commutative_ring(a in arb(3), b in arb(3), c in arb(3)) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.add(&a.neg()).unwrap(), QWittVector::zero(3, 6).unwrap());
        }
    }
}
