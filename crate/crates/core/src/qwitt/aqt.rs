//! The ring `A^q[t]` with the rescaled Hadamard product, and the embedding `iota^q`.

use crate::error::{Error, Result};
use crate::exact::{QAlgebra, Rational, Ring};

/// `sum a_n t^n` with product `sum (1/q) a_n b_n t^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AqtSeries<C: Ring = Rational> {
    q: u64,
    pub coeffs: Vec<C>,
}

impl<C: QAlgebra> AqtSeries<C> {
    pub fn new(q: u64, coeffs: Vec<C>) -> Self {
        AqtSeries { q, coeffs }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The multiplicative unit, `a_n = q` for all `n`.
    pub fn one(q: u64, len: usize) -> Self {
        AqtSeries {
            q,
            coeffs: vec![C::from_i64(q as i64); len],
        }
    }

    fn check(&self, other: &Self) -> Result<usize> {
        if self.q != other.q {
            return Err(Error::MismatchedQ(self.q, other.q));
        }
        Ok(self.coeffs.len().min(other.coeffs.len()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.check(other)?;
        Ok(AqtSeries {
            q: self.q,
            coeffs: (0..n).map(|i| self.coeffs[i].add(&other.coeffs[i])).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.check(other)?;
        let q = self.q as i64;
        Ok(AqtSeries {
            q: self.q,
            coeffs: (0..n)
                .map(|i| self.coeffs[i].mul(&other.coeffs[i]).div_int(q))
                .collect(),
        })
    }
}

/// `iota^q((x_n)) = sum_n q x_n t^(n-1)`.
pub fn iota_q<C: QAlgebra>(g: &[C], q: u64) -> AqtSeries<C> {
    AqtSeries::new(q, g.iter().map(|x| x.mul_int(q as i64)).collect())
}
