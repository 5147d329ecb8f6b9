//! `W_0(k)` for `k` with roots of unity as eigenvalues, the characteristic series `L` and the divisor map.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{GroupRingElem, IntGroupRing, QmodZ, RatGroupRing, Ring, TruncSeries};

/// Virtual endomorphism class `sum n(alpha) [alpha]`, eigenvalues in Q/Z.
///
/// With `prime = Some(p)` all eigenvalues live in the prime-to-`p` part.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct W0Elem {
    terms: BTreeMap<QmodZ, i64>,
    prime: Option<u64>,
}

impl W0Elem {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The class of `(k, 1)`, the unit for the tensor product.
    pub fn one() -> Self {
        Self::eigenvalue(QmodZ::ZERO, 1)
    }

    pub fn eigenvalue(alpha: QmodZ, mult: i64) -> Self {
        Self::from_pairs([(alpha, mult)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (QmodZ, i64)>) -> Self {
        let mut out = Self::zero();
        for (a, m) in pairs {
            out.add_term(a, m);
        }
        out
    }

    /// Restricts to `(Q/Z)^(p)`, failing if an eigenvalue lies outside it.
    pub fn with_prime(mut self, p: u64) -> Result<Self> {
        crate::exact::qmodz::check_prime_to(p, self.terms.keys())?;
        self.prime = Some(p);
        Ok(self)
    }

    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    fn add_term(&mut self, alpha: QmodZ, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.terms.entry(alpha).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.remove(&alpha);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QmodZ, &i64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, alpha: &QmodZ) -> i64 {
        self.terms.get(alpha).copied().unwrap_or(0)
    }

    /// Rank of the underlying virtual module.
    pub fn rank(&self) -> i64 {
        self.terms.values().sum()
    }

    fn joint_prime(&self, other: &Self) -> Option<u64> {
        self.prime.or(other.prime)
    }

    /// Direct sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, m) in &other.terms {
            out.add_term(*a, *m);
        }
        out.prime = self.joint_prime(other);
        out
    }

    pub fn neg(&self) -> Self {
        W0Elem {
            terms: self.terms.iter().map(|(a, m)| (*a, -m)).collect(),
            prime: self.prime,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::from_pairs(self.terms.iter().map(|(a, m)| (*a, m * k)));
        out.prime = self.prime;
        out
    }

    /// Tensor product: eigenvalues multiply, multiplicities multiply.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, m) in &self.terms {
            for (b, n) in &other.terms {
                out.add_term(a.add(b), m * n);
            }
        }
        out.prime = self.joint_prime(other);
        out
    }

    /// `F_n`: `(E, f) -> (E, f^n)`.
    pub fn frobenius(&self, n: u64) -> Self {
        let mut out = Self::from_pairs(self.terms.iter().map(|(a, m)| (a.mul_int(n as i64), *m)));
        out.prime = self.prime;
        out
    }

    /// `V_n`: each eigenvalue `alpha` is replaced by its `n` roots of order `n`.
    pub fn verschiebung(&self, n: u64) -> Result<Self> {
        if let Some(p) = self.prime {
            if n % p == 0 && !self.is_zero() {
                return Err(Error::NoRoots { p, n });
            }
        }
        let mut out = Self::zero();
        for (a, m) in &self.terms {
            for s in a.roots(n) {
                out.add_term(s, *m);
            }
        }
        out.prime = self.prime;
        Ok(out)
    }

    /// The divisor `sum n(alpha) [alpha]` in `Z[Q/Z]`.
    pub fn divisor(&self) -> IntGroupRing {
        GroupRingElem::from_terms(self.terms.iter().map(|(a, m)| (*a, BigInt::from(*m))))
    }

    /// Inverse of [`W0Elem::divisor`].
    pub fn from_divisor(d: &IntGroupRing) -> Result<Self> {
        let mut out = Self::zero();
        for (a, c) in d.terms() {
            let m = c
                .to_i64()
                .ok_or_else(|| Error::InvalidArgument(format!("multiplicity {c} out of range")))?;
            out.add_term(*a, m);
        }
        Ok(out)
    }

    /// `L(e) = prod (1 - alpha t)^(-n(alpha))` as a formal factor list.
    pub fn l_factors(&self) -> FactorList {
        FactorList::from_pairs(
            self.terms
                .iter()
                .map(|(a, m)| ((*a, 1), BigInt::from(*m))),
        )
    }

    /// Ghost components `gh_m(e) = sum n(alpha) [alpha^m]` in `Z[Q/Z]`.
    pub fn ghost(&self, order: usize) -> Vec<IntGroupRing> {
        (1..=order)
            .map(|m| {
                GroupRingElem::from_terms(
                    self.terms
                        .iter()
                        .map(|(a, n)| (a.mul_int(m as i64), BigInt::from(*n))),
                )
            })
            .collect()
    }
}

/// `w0_L`: the characteristic series as a formal factor list.
pub fn w0_l(e: &W0Elem) -> FactorList {
    e.l_factors()
}

/// Formal product `prod (1 - alpha t^k)^(-e)` keyed by `(alpha, k)`.
///
/// Over Q/Z every factor of degree `k` splits as `prod_{omega^k = alpha} (1 - omega t)`,
/// which [`FactorList::normalize`] applies to reach a canonical degree-one form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FactorList {
    factors: BTreeMap<(QmodZ, u64), BigInt>,
}

impl FactorList {
    pub fn from_pairs(pairs: impl IntoIterator<Item = ((QmodZ, u64), BigInt)>) -> Self {
        let mut out = FactorList::default();
        for (k, e) in pairs {
            out.add_factor(k, e);
        }
        out
    }

    fn add_factor(&mut self, key: (QmodZ, u64), e: BigInt) {
        if Ring::is_zero(&e) {
            return;
        }
        let v = self.factors.entry(key).or_insert_with(|| BigInt::from(0));
        *v += e;
        if Ring::is_zero(v) {
            self.factors.remove(&key);
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = (&(QmodZ, u64), &BigInt)> {
        self.factors.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of series: exponents add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, e) in &other.factors {
            out.add_factor(*k, e.clone());
        }
        out
    }

    /// Raises the series to an integer power.
    pub fn pow(&self, q: &BigInt) -> Self {
        FactorList::from_pairs(self.factors.iter().map(|(k, e)| (*k, e * q)))
    }

    /// Splits every factor into degree-one factors.
    pub fn normalize(&self) -> Self {
        let mut out = FactorList::default();
        for ((a, k), e) in &self.factors {
            for s in a.roots(*k) {
                out.add_factor((s, 1), e.clone());
            }
        }
        out
    }

    /// `t -> t^n`.
    pub fn verschiebung(&self, n: u64) -> Self {
        FactorList::from_pairs(self.factors.iter().map(|((a, k), e)| ((*a, k * n), e.clone())))
    }

    /// `(1 - alpha t)^(-1) -> (1 - alpha^n t)^(-1)`, after normalizing.
    pub fn frobenius(&self, n: u64) -> Self {
        FactorList::from_pairs(
            self.normalize()
                .factors
                .into_iter()
                .map(|((a, _), e)| ((a.mul_int(n as i64), 1), e)),
        )
    }

    /// Witt product on normalized factors: `(1-at)^(-x) * (1-bt)^(-y) = (1-abt)^(-xy)`.
    pub fn star(&self, other: &Self) -> Self {
        let a = self.normalize();
        let b = other.normalize();
        let mut out = FactorList::default();
        for ((x, _), e) in &a.factors {
            for ((y, _), f) in &b.factors {
                out.add_factor((x.add(y), 1), e * f);
            }
        }
        out
    }

    /// Raw divisor `sum e [alpha]` of the normalized list.
    pub fn divisor(&self) -> IntGroupRing {
        GroupRingElem::from_terms(self.normalize().factors.into_iter().map(|((a, _), e)| (a, e)))
    }

    /// Expansion with group-ring coefficients in `Q[Q/Z]`.
    ///
    /// This is exact but treats `[alpha]` as a free group element, so it does
    /// not see cyclotomic relations between different factors.
    pub fn expand_group_ring(&self, order: usize) -> TruncSeries<RatGroupRing> {
        let mut f = TruncSeries::one(order);
        for ((a, k), e) in &self.factors {
            let g = TruncSeries::geometric(&RatGroupRing::basis(*a), *k as usize, order);
            let e = e.to_i64().expect("exponent fits in i64");
            f = f.mul(&g.pow_int(e));
        }
        f
    }

    /// Numerical expansion with `alpha = exp(2 pi i a/b)`.
    pub fn expand_complex(&self, order: usize) -> TruncSeries<Complex64> {
        let mut f = TruncSeries::one(order);
        for ((a, k), e) in &self.factors {
            let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * a.phase());
            let g = TruncSeries::geometric(&z, *k as usize, order);
            let e = e.to_i64().expect("exponent fits in i64");
            f = f.mul(&g.pow_int(e));
        }
        f
    }
}
