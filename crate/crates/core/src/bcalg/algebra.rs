//! Normal forms `sum mu~_a x mu_b^*` with `gcd(a, b) = 1` for integral Bost–Connes algebras.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::bcalg::habiro::HabiroElem;
use crate::exact::arith::gcd;
use crate::exact::{
    DeformedGroupRing, DeformedRatGroupRing, Dilate, GroupRingElem, IntGroupRing, QAlgebra, QmodZ, RatGroupRing,
    Rational, Ring,
};

/// Group ring over Habiro truncations, `R^[Q/Z]`.
pub type HabiroGroupRing = GroupRingElem<QmodZ, HabiroElem>;

/// A generator in a word.
#[derive(Clone, PartialEq, Debug)]
pub enum BCGen<X> {
    /// `mu~_n`.
    Mu(u64),
    /// `mu_n^*`.
    MuStar(u64),
    Elem(X),
}

/// Finite sums of monomials `mu~_a x mu_b^*`, keyed by `(a, b)`.
///
/// `X` is the group ring; its [`Dilate`] structure supplies `sigma_n` and `rho~_n`.
#[derive(Clone, PartialEq, Debug)]
pub struct BCElem<X: Ring + Dilate> {
    terms: BTreeMap<(u64, u64), X>,
}

impl<X: Ring + Dilate> BCElem<X> {
    pub fn zero() -> Self {
        BCElem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::elem(X::one())
    }

    pub fn monomial(a: u64, x: X, b: u64) -> Self {
        assert!(a >= 1 && b >= 1);
        let mut out = Self::zero();
        out.add_monomial(a, x, b);
        out
    }

    pub fn elem(x: X) -> Self {
        Self::monomial(1, x, 1)
    }

    pub fn mu_tilde(n: u64) -> Self {
        Self::monomial(n, X::one(), 1)
    }

    pub fn mu_star(n: u64) -> Self {
        Self::monomial(1, X::one(), n)
    }

    pub fn generator(g: &BCGen<X>) -> Self {
        match g {
            BCGen::Mu(n) => Self::mu_tilde(*n),
            BCGen::MuStar(n) => Self::mu_star(*n),
            BCGen::Elem(x) => Self::elem(x.clone()),
        }
    }

    /// Adds `mu~_a x mu_b^*`, contracting a common factor of `a` and `b` first.
    pub fn add_monomial(&mut self, a: u64, x: X, b: u64) {
        let h = gcd(a, b);
        let (a, b, x) = if h > 1 { (a / h, b / h, x.rho(h)) } else { (a, b, x) };
        if x.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(X::zero);
        *entry = entry.add(&x);
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &X, u64)> {
        self.terms.iter().map(|(&(a, b), x)| (a, x, b))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, x, b) in other.terms() {
            out.add_monomial(a, x.clone(), b);
        }
        out
    }

    pub fn neg(&self) -> Self {
        BCElem {
            terms: self.terms.iter().map(|(k, x)| (*k, x.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &X) -> Self {
        let mut out = Self::zero();
        for (a, x, b) in self.terms() {
            out.add_monomial(a, x.mul(c), b);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x, b) in self.terms() {
            for (c, y, d) in other.terms() {
                let (a2, z, b2) = monomial_product(a, x, b, c, y, d);
                out.add_monomial(a2, z, b2);
            }
        }
        out
    }
}

/// `(mu~_a x mu_b^*)(mu~_c y mu_d^*)`.
///
/// With `g = gcd(b, c)`, `mu_b^* mu~_c = g mu~_(c/g) mu_(b/g)^*`; then `x` moves right
/// past `mu~_(c/g)` and `y` moves left past `mu_(b/g)^*`.
fn monomial_product<X: Ring + Dilate>(a: u64, x: &X, b: u64, c: u64, y: &X, d: u64) -> (u64, X, u64) {
    let g = gcd(b, c);
    let (b1, c1) = (b / g, c / g);
    let z = x.sigma(c1).mul(&y.sigma(b1)).mul_int(g as i64);
    (a * c1, z, b1 * d)
}

/// Multiplies out a word of generators.
pub fn bc_normalize<X: Ring + Dilate>(word: &[BCGen<X>]) -> BCElem<X> {
    word.iter()
        .fold(BCElem::one(), |acc, g| acc.mul(&BCElem::generator(g)))
}

pub fn bc_mul<X: Ring + Dilate>(x: &BCElem<X>, y: &BCElem<X>) -> BCElem<X> {
    x.mul(y)
}

/// `mu_n = (1/n) mu~_n` in the rational algebra.
pub fn mu_rational<X: QAlgebra + Dilate>(n: u64) -> BCElem<X> {
    BCElem::monomial(n, X::one().div_int(n as i64), 1)
}

/// Base change to rational coefficients.
pub fn to_rational(x: &BCElem<IntGroupRing>) -> BCElem<RatGroupRing> {
    let mut out = BCElem::zero();
    for (a, y, b) in x.terms() {
        out.add_monomial(a, y.map_coeffs(<Rational as Ring>::from_bigint), b);
    }
    out
}

/// Base change of the deformed algebra to rational coefficients.
pub fn to_rational_deformed(x: &BCElem<DeformedGroupRing>) -> BCElem<DeformedRatGroupRing> {
    let mut out = BCElem::zero();
    for (a, y, b) in x.terms() {
        out.add_monomial(a, y.map_coeffs(<Rational as Ring>::from_bigint), b);
    }
    out
}

/// The image of an integral element under `Z -> R^`, `e(r) -> 1 e(r)`.
pub fn to_habiro(x: &BCElem<IntGroupRing>, level: u32) -> crate::Result<BCElem<HabiroGroupRing>> {
    let mut out = BCElem::zero();
    for (a, y, b) in x.terms() {
        let mut h = HabiroGroupRing::zero();
        for (t, c) in y.terms() {
            h.add_term(*t, HabiroElem::new(vec![c.clone()], Some(level), 1)?);
        }
        out.add_monomial(a, h, b);
    }
    Ok(out)
}

pub fn int_scalar<X: Ring + Dilate>(n: i64) -> BCElem<X> {
    BCElem::elem(X::from_bigint(&BigInt::from(n)))
}
