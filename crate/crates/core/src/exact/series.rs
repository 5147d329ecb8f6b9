//! Truncated power series with unit constant term, the carrier of `Lambda(A) = 1 + tA[[t]]`.

use num_bigint::BigInt;

use super::ring::{QAlgebra, Rational, Ring};
use crate::error::{Error, Result};

/// `c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))` with `c_0 = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries<C: Ring = Rational> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    /// Builds a series from `c_0..c_N`; fails unless `c_0 = 1`.
    pub fn new(coeffs: Vec<C>) -> Result<Self> {
        match coeffs.first() {
            Some(c) if c.is_one() => Ok(TruncSeries { coeffs }),
            _ => Err(Error::NotUnitSeries),
        }
    }

    /// Builds from `c_1..c_N`, prepending the constant term 1.
    pub fn from_tail(tail: Vec<C>) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(C::one());
        coeffs.extend(tail);
        TruncSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::from_tail(vec![C::zero(); order])
    }

    /// `(1 - a t^k)^(-1)` to order `N`.
    pub fn geometric(a: &C, k: usize, order: usize) -> Self {
        assert!(k >= 1);
        let mut out = Self::one(order);
        let mut p = C::one();
        let mut i = k;
        while i <= order {
            p = p.mul(a);
            out.coeffs[i] = p.clone();
            i += k;
        }
        out
    }

    /// `1 - a t^k` to order `N`.
    pub fn linear(a: &C, k: usize, order: usize) -> Self {
        assert!(k >= 1);
        let mut out = Self::one(order);
        if k <= order {
            out.coeffs[k] = a.neg();
        }
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![C::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                out[i + j] = out[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiplicative inverse, which exists because `c_0 = 1`.
    pub fn inverse(&self) -> Self {
        let n = self.order();
        let mut h = vec![C::zero(); n + 1];
        h[0] = C::one();
        for m in 1..=n {
            let mut s = C::zero();
            for k in 1..=m {
                s = s.add(&self.coeffs[k].mul(&h[m - k]));
            }
            h[m] = s.neg();
        }
        TruncSeries { coeffs: h }
    }

    pub fn pow_int(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::one(self.order());
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// `f(t^n)`; the result has order `n * N`.
    pub fn substitute_power(&self, n: usize) -> Self {
        assert!(n >= 1);
        let mut out = Self::one(self.order() * n);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.coeffs[i * n] = c.clone();
        }
        out
    }

    /// `f(c t)`.
    pub fn scale_variable(&self, c: &C) -> Self {
        let mut p = C::one();
        let mut out = self.clone();
        for x in out.coeffs.iter_mut().skip(1) {
            p = p.mul(c);
            *x = x.mul(&p);
        }
        out
    }

    /// Coefficients `g_1..g_N` of `t f'(t)/f(t)`, the ghost components.
    ///
    /// Uses the Newton identity `g_m = m f_m - sum_{k<m} f_k g_{m-k}`, so no
    /// division is needed and this works over any ring.
    pub fn ghost_components(&self) -> Vec<C> {
        let n = self.order();
        let mut g: Vec<C> = Vec::with_capacity(n);
        for m in 1..=n {
            let mut s = self.coeffs[m].mul_int(m as i64);
            for k in 1..m {
                s = s.sub(&self.coeffs[k].mul(&g[m - k - 1]));
            }
            g.push(s);
        }
        g
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries::from_tail(self.coeffs[1..].iter().map(f).collect())
    }
}

impl<C: QAlgebra> TruncSeries<C> {
    /// The unique unit series whose ghost components are `g_1..g_N`.
    pub fn from_ghost(g: &[C]) -> Self {
        let n = g.len();
        let mut f = vec![C::zero(); n + 1];
        f[0] = C::one();
        for m in 1..=n {
            let mut s = C::zero();
            for k in 1..=m {
                s = s.add(&g[k - 1].mul(&f[m - k]));
            }
            f[m] = s.div_int(m as i64);
        }
        TruncSeries { coeffs: f }
    }

    /// `f^e = exp(e log f)` for rational `e`.
    ///
    /// Coefficients follow from `f h' = e f' h` for `h = f^e`.
    pub fn pow(&self, e: &Rational) -> Self {
        let n = self.order();
        let mut h = vec![C::zero(); n + 1];
        h[0] = C::one();
        let e1 = e + Rational::from_integer(BigInt::from(1));
        for m in 1..=n {
            let mut s = C::zero();
            for k in 1..=m {
                let w = &e1 * Rational::from_integer(BigInt::from(k)) - Rational::from_integer(BigInt::from(m));
                s = s.add(&self.coeffs[k].mul(&h[m - k]).scale(&w));
            }
            h[m] = s.div_int(m as i64);
        }
        TruncSeries { coeffs: h }
    }

    /// `f^e` for an exponent `e` in the coefficient ring, by the same recurrence as [`TruncSeries::pow`].
    pub fn pow_elem(&self, e: &C) -> Self {
        let n = self.order();
        let mut h = vec![C::zero(); n + 1];
        h[0] = C::one();
        let e1 = e.add(&C::one());
        for m in 1..=n {
            let mut s = C::zero();
            for k in 1..=m {
                let w = e1.mul_int(k as i64).sub(&C::from_i64(m as i64));
                s = s.add(&self.coeffs[k].mul(&h[m - k]).mul(&w));
            }
            h[m] = s.div_int(m as i64);
        }
        TruncSeries { coeffs: h }
    }
}
