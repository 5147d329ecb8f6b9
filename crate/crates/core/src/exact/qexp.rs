//! Polynomials in `q^r` with non-negative rational exponents, the ring `Z[q^r : r in Q+]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::ring::{to_f64, Dilate, QAlgebra, Rational, Ring};

/// Finite sum `sum c_r q^r` keyed by the exponent `r >= 0`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct QExpPoly<C = BigInt> {
    terms: BTreeMap<Rational, C>,
}

impl<C: Ring> QExpPoly<C> {
    pub fn monomial(coeff: C, exp: Rational) -> Self {
        assert!(!exp.is_negative(), "negative q-exponent {exp}");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        QExpPoly { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, <Rational as Ring>::zero())
    }

    /// `q^exp` with unit coefficient.
    pub fn q_pow(exp: Rational) -> Self {
        Self::monomial(C::one(), exp)
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Rational, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exp: Rational, c: C) {
        assert!(!exp.is_negative(), "negative q-exponent {exp}");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &Rational) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    /// Maps every exponent `r` to `f(r)`.
    pub fn map_exponents(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> QExpPoly<D> {
        QExpPoly::from_terms(self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// `q^r -> q^(nr)`.
    pub fn qsigma(&self, n: u64) -> Self {
        let n = Rational::from_integer(BigInt::from(n));
        self.map_exponents(|e| e * &n)
    }

    /// `q^r -> q^(r/n)`.
    pub fn qrho(&self, n: u64) -> Self {
        let n = Rational::from_integer(BigInt::from(n));
        self.map_exponents(|e| e / &n)
    }

    /// Multiplies by `q^r`.
    pub fn shift(&self, r: &Rational) -> Self {
        self.map_exponents(|e| e + r)
    }

    /// The lowest common denominator of the exponents (the lattice `q^(1/D)`).
    pub fn exponent_denominator(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .keys()
            .fold(BigInt::from(1), |acc, e| acc.lcm(e.denom()))
    }

    /// Numerical value at a real `q > 0`.
    pub fn eval(&self, q: f64, coeff_to_f64: impl Fn(&C) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| coeff_to_f64(c) * q.powf(to_f64(e)))
            .sum()
    }
}

impl<C: Ring> Ring for QExpPoly<C> {
    fn zero() -> Self {
        QExpPoly {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        QExpPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(C::from_bigint(n))
    }
}

impl<C: QAlgebra> QAlgebra for QExpPoly<C> {
    fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }
}

impl<C: Ring> Dilate for QExpPoly<C> {
    fn sigma(&self, n: u64) -> Self {
        self.qsigma(n)
    }
    fn rho(&self, n: u64) -> Self {
        self.qrho(n)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for QExpPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if Ring::is_zero(e) {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})q^({e})")?;
            }
        }
        Ok(())
    }
}
