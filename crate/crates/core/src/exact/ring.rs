//! Coefficient-ring abstraction shared by series, group rings and the BC algebras.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rational = BigRational;

/// A commutative ring with unit.
///
/// Methods take references so that big-number coefficients are never moved
/// implicitly. Generic code should only rely on these methods.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn from_bigint(n: &BigInt) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn mul_int(&self, n: i64) -> Self {
        self.mul(&Self::from_i64(n))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A ring containing the rationals, so that division by integers is available.
pub trait QAlgebra: Ring {
    fn scale(&self, r: &Rational) -> Self;

    fn div_int(&self, n: i64) -> Self {
        self.scale(&Rational::new(BigInt::from(1), BigInt::from(n)))
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_bigint(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
}

impl QAlgebra for Rational {
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_bigint(n: &BigInt) -> Self {
        use num_traits::ToPrimitive;
        Complex64::new(n.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl QAlgebra for Complex64 {
    fn scale(&self, r: &Rational) -> Self {
        self * to_f64(r)
    }
}

impl Dilate for Complex64 {}

/// Coefficient rings carrying the endomorphisms `q -> q^n` and `q -> q^(1/n)`.
///
/// For rings without a `q` both are the identity.
pub trait Dilate: Ring {
    fn sigma(&self, _n: u64) -> Self {
        self.clone()
    }
    fn rho(&self, _n: u64) -> Self {
        self.clone()
    }
}

impl Dilate for BigInt {}
impl Dilate for Rational {}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if Zero::is_zero(&q) {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Converts an integral rational to `BigInt`, failing otherwise.
pub fn to_integer(r: &Rational) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NotIntegral(r.to_string()))
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Very large numerator/denominator: fall back to logarithms.
        let sign = if r.is_negative() { -1.0 } else { 1.0 };
        let ln = |b: &BigInt| {
            let bits = b.bits();
            let shift = bits.saturating_sub(60);
            let top = (b.abs() >> shift).to_f64().unwrap_or(f64::MAX);
            top.ln() + shift as f64 * std::f64::consts::LN_2
        };
        sign * (ln(r.numer()) - ln(r.denom())).exp()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(parse_rational(" 2 / -4 ").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn ring_pow() {
        assert_eq!(Ring::pow(&int(3), 4), int(81));
        assert_eq!(Ring::pow(&rat(1, 2), 0), int(1));
        assert_eq!(<BigInt as Ring>::from_i64(5).mul_int(-2), BigInt::from(-10));
    }

    #[test]
    fn integer_conversion() {
        assert_eq!(to_integer(&int(7)).unwrap(), BigInt::from(7));
        assert!(to_integer(&rat(7, 2)).is_err());
        assert!((to_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
