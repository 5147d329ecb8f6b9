//! The torsion group Q/Z, written additively, used for abstract roots of unity e(r).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::arith::gcd;
use super::ring::{parse_rational, Rational};
use crate::error::{Error, Result};

/// A reduced fraction `a/b` with `0 <= a < b`, `gcd(a, b) = 1`.
///
/// In multiplicative notation this is the root of unity `exp(2 pi i a/b)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QmodZ {
    num: u64,
    den: u64,
}

impl QmodZ {
    pub const ZERO: QmodZ = QmodZ { num: 0, den: 1 };

    /// `a/b mod 1`.
    pub fn new(a: i64, b: u64) -> Self {
        assert!(b > 0, "zero denominator");
        let r = (a as i128).rem_euclid(b as i128) as u64;
        Self::reduce(r, b)
    }

    fn reduce(num: u64, den: u64) -> Self {
        let g = gcd(num, den);
        if num == 0 {
            Self::ZERO
        } else {
            QmodZ {
                num: num / g,
                den: den / g,
            }
        }
    }

    pub fn from_rational(r: &Rational) -> Result<Self> {
        let den = r
            .denom()
            .to_u64()
            .ok_or_else(|| Error::InvalidArgument(format!("torsion denominator too large: {r}")))?;
        let num = r.numer().mod_floor(&BigInt::from(den));
        Ok(Self::reduce(num.to_u64().expect("reduced numerator fits"), den))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::from_rational(&parse_rational(s)?)
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    /// The order of this element in Q/Z.
    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn add(&self, other: &Self) -> Self {
        let den = self.den / gcd(self.den, other.den) * other.den;
        let a = self.num as u128 * (den / self.den) as u128 + other.num as u128 * (den / other.den) as u128;
        Self::reduce((a % den as u128) as u64, den)
    }

    pub fn neg(&self) -> Self {
        if self.num == 0 {
            *self
        } else {
            QmodZ {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `n * self`, i.e. the `n`-th power of the root of unity.
    pub fn mul_int(&self, n: i64) -> Self {
        let r = (self.num as i128 * n as i128).rem_euclid(self.den as i128) as u64;
        Self::reduce(r, self.den)
    }

    /// All `s` with `n * s = self`, sorted canonically.
    pub fn roots(&self, n: u64) -> Vec<QmodZ> {
        assert!(n > 0, "roots of order zero");
        let den = self.den as u128 * n as u128;
        let den = u64::try_from(den).expect("torsion denominator overflow");
        let mut out: Vec<QmodZ> = (0..n)
            .map(|j| Self::reduce(self.num + j * self.den, den))
            .collect();
        out.sort();
        out
    }

    /// Membership in the prime-to-`p` part `(Q/Z)^(p)`.
    pub fn is_prime_to(&self, p: u64) -> bool {
        self.den % p != 0
    }

    /// Phase `a/b` as a float in `[0, 1)`, reduced exactly before conversion.
    pub fn phase(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `k * self` reduced to a phase in `[0, 1)`, exact in the integers.
    pub fn phase_times(&self, k: i128) -> f64 {
        let r = (self.num as i128 * k.rem_euclid(self.den as i128)).rem_euclid(self.den as i128);
        r as f64 / self.den as f64
    }
}

impl Ord for QmodZ {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.den, self.num).cmp(&(other.den, other.num))
    }
}

impl PartialOrd for QmodZ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Checks `(Q/Z)^(p)` membership for a collection, returning the offending element.
pub fn check_prime_to<'a>(p: u64, elems: impl IntoIterator<Item = &'a QmodZ>) -> Result<()> {
    for e in elems {
        if !e.is_prime_to(p) {
            return Err(Error::InvalidArgument(format!(
                "{e} has denominator divisible by {p}"
            )));
        }
    }
    Ok(())
}
