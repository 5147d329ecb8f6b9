//! Group rings `C[G]` for `G = Q/Z` and for the deformed generators `E(r, r') = q^r e(r')`.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::Signed;

use super::qexp::QExpPoly;
use super::qmodz::QmodZ;
use super::ring::{Dilate, QAlgebra, Rational, Ring};

/// A commutative group (or monoid) used as the basis of a group ring.
///
/// `sigma` and `roots` are the endomorphism `g -> g^n` and its set-valued
/// inverse, which drive the Bost–Connes maps on the group ring.
pub trait GroupKey: Clone + Ord + Debug {
    fn identity() -> Self;
    fn combine(&self, other: &Self) -> Self;
    fn sigma(&self, n: u64) -> Self;
    fn roots(&self, n: u64) -> Vec<Self>;
}

impl GroupKey for QmodZ {
    fn identity() -> Self {
        QmodZ::ZERO
    }
    fn combine(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sigma(&self, n: u64) -> Self {
        self.mul_int(n as i64)
    }
    fn roots(&self, n: u64) -> Vec<Self> {
        QmodZ::roots(self, n)
    }
}

/// `E(r, r') = q^r e(r')` with `r >= 0` rational and `r'` in Q/Z.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DeformedGenerator {
    pub qexp: Rational,
    pub torsion: QmodZ,
}

impl DeformedGenerator {
    pub fn new(qexp: Rational, torsion: QmodZ) -> Self {
        assert!(!qexp.is_negative(), "negative q-exponent {qexp}");
        DeformedGenerator { qexp, torsion }
    }
}

impl Ord for DeformedGenerator {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.torsion
            .cmp(&other.torsion)
            .then_with(|| self.qexp.cmp(&other.qexp))
    }
}

impl PartialOrd for DeformedGenerator {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl GroupKey for DeformedGenerator {
    fn identity() -> Self {
        DeformedGenerator::new(<Rational as Ring>::zero(), QmodZ::ZERO)
    }
    fn combine(&self, other: &Self) -> Self {
        DeformedGenerator::new(&self.qexp + &other.qexp, self.torsion.add(&other.torsion))
    }
    fn sigma(&self, n: u64) -> Self {
        let nn = Rational::from_integer(BigInt::from(n));
        DeformedGenerator::new(&self.qexp * nn, self.torsion.mul_int(n as i64))
    }
    fn roots(&self, n: u64) -> Vec<Self> {
        let r = &self.qexp / Rational::from_integer(BigInt::from(n));
        self.torsion
            .roots(n)
            .into_iter()
            .map(|s| DeformedGenerator::new(r.clone(), s))
            .collect()
    }
}

/// Finite sum `sum c_g [g]` with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupRingElem<G: GroupKey, C: Ring> {
    terms: BTreeMap<G, C>,
}

/// `Z[Q/Z]`.
pub type IntGroupRing = GroupRingElem<QmodZ, BigInt>;
/// `Q[Q/Z]`.
pub type RatGroupRing = GroupRingElem<QmodZ, Rational>;
/// `R[Q/Z]` with `R = Z[q^r]`, written on the generators `E(r, r')`.
pub type DeformedGroupRing = GroupRingElem<DeformedGenerator, BigInt>;
/// Rational form of [`DeformedGroupRing`].
pub type DeformedRatGroupRing = GroupRingElem<DeformedGenerator, Rational>;

impl<G: GroupKey, C: Ring> GroupRingElem<G, C> {
    pub fn basis(g: G) -> Self {
        Self::term(g, C::one())
    }

    pub fn term(g: G, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (G, C)>) -> Self {
        let mut out = Self::zero();
        for (g, c) in pairs {
            out.add_term(g, c);
        }
        out
    }

    pub fn add_term(&mut self, g: G, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&G, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &G) -> C {
        self.terms.get(g).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale_by(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, x)| (g.clone(), x.mul(c))))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> GroupRingElem<G, D> {
        GroupRingElem::from_terms(self.terms.iter().map(|(g, c)| (g.clone(), f(c))))
    }

    /// Pushforward along a map of group elements.
    pub fn map_keys<H: GroupKey>(&self, f: impl Fn(&G) -> H) -> GroupRingElem<H, C> {
        GroupRingElem::from_terms(self.terms.iter().map(|(g, c)| (f(g), c.clone())))
    }
}

impl<G: GroupKey, C: Dilate> GroupRingElem<G, C> {
    /// `sigma_n`: `c [g] -> sigma_n(c) [g^n]`.
    pub fn sigma(&self, n: u64) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, c)| (g.sigma(n), c.sigma(n))))
    }

    /// `rho~_n`: `c [g] -> rho_n(c) sum_{s^n = g} [s]`, without the `1/n` normalization.
    pub fn rho_tilde(&self, n: u64) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            let c = c.rho(n);
            for s in g.roots(n) {
                out.add_term(s, c.clone());
            }
        }
        out
    }
}

impl<G: GroupKey, C: Dilate + QAlgebra> GroupRingElem<G, C> {
    /// `rho_n = (1/n) rho~_n`.
    pub fn rho(&self, n: u64) -> Self {
        self.rho_tilde(n).div_int(n as i64)
    }
}

impl<G: GroupKey, C: Ring> Ring for GroupRingElem<G, C> {
    fn zero() -> Self {
        GroupRingElem {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::basis(G::identity())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        GroupRingElem {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c.neg())).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            for (h, d) in &other.terms {
                out.add_term(g.combine(h), c.mul(d));
            }
        }
        out
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::term(G::identity(), C::from_bigint(n))
    }
}

impl<G: GroupKey, C: QAlgebra> QAlgebra for GroupRingElem<G, C> {
    fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }
}

impl<G: GroupKey, C: Dilate> Dilate for GroupRingElem<G, C> {
    fn sigma(&self, n: u64) -> Self {
        GroupRingElem::sigma(self, n)
    }
    fn rho(&self, n: u64) -> Self {
        self.rho_tilde(n)
    }
}

/// Rewrites `sum c E(r, r')` as `sum_{r'} (sum c q^r) [e(r')]`.
pub fn deformed_to_qexp<C: Ring>(x: &GroupRingElem<DeformedGenerator, C>) -> GroupRingElem<QmodZ, QExpPoly<C>> {
    GroupRingElem::from_terms(
        x.terms()
            .map(|(g, c)| (g.torsion, QExpPoly::monomial(c.clone(), g.qexp.clone()))),
    )
}

/// Inverse of [`deformed_to_qexp`].
pub fn qexp_to_deformed<C: Ring>(x: &GroupRingElem<QmodZ, QExpPoly<C>>) -> GroupRingElem<DeformedGenerator, C> {
    let mut out = GroupRingElem::zero();
    for (t, p) in x.terms() {
        for (e, c) in p.terms() {
            out.add_term(DeformedGenerator::new(e.clone(), *t), c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{int, rat};
    use proptest::prelude::*;

    fn e(a: i64, b: u64) -> IntGroupRing {
        IntGroupRing::basis(QmodZ::new(a, b))
    }

    fn big(a: i64, r: Rational, t: QmodZ) -> DeformedGroupRing {
        DeformedGroupRing::term(DeformedGenerator::new(r, t), BigInt::from(a))
    }

    #[test]
    fn group_law_products() {
        assert_eq!(e(1, 3).mul(&e(1, 3)), e(2, 3));
        let x = e(0, 1).add(&e(1, 2));
        let y = e(0, 1).sub(&e(1, 2));
        assert!(x.mul(&y).is_zero());
        let g = big(1, rat(1, 2), QmodZ::new(1, 3));
        assert_eq!(g.mul(&g), big(1, int(1), QmodZ::new(2, 3)));
    }

    #[test]
    fn sigma_rho_on_torsion() {
        assert_eq!(e(1, 3).sigma(2), e(2, 3));
        assert_eq!(e(1, 3).rho_tilde(2), e(1, 6).add(&e(2, 3)));
        assert_eq!(e(1, 3).rho_tilde(2).sigma(2), e(1, 3).mul_int(2));
    }

    #[test]
    fn sigma_rho_on_deformed() {
        let x = big(1, rat(1, 2), QmodZ::new(1, 3));
        assert_eq!(x.sigma(2), big(1, int(1), QmodZ::new(2, 3)));
        let y = big(1, int(1), QmodZ::new(1, 3));
        assert_eq!(
            y.rho_tilde(2),
            big(1, rat(1, 2), QmodZ::new(1, 6)).add(&big(1, rat(1, 2), QmodZ::new(2, 3)))
        );
        assert_eq!(qexp_to_deformed(&deformed_to_qexp(&y.rho_tilde(3))), y.rho_tilde(3));
    }

    fn arb_int_gr() -> impl Strategy<Value = IntGroupRing> {
        prop::collection::vec((0i64..12, 1u64..13, -3i64..4), 0..4).prop_map(|v| {
            IntGroupRing::from_terms(v.into_iter().map(|(a, b, c)| (QmodZ::new(a, b), BigInt::from(c))))
        })
    }

    fn arb_def_gr() -> impl Strategy<Value = DeformedGroupRing> {
        prop::collection::vec((0i64..6, 1i64..4, 0i64..12, 1u64..13, -3i64..4), 0..4).prop_map(|v| {
            DeformedGroupRing::from_terms(v.into_iter().map(|(n, d, a, b, c)| {
                (DeformedGenerator::new(rat(n, d), QmodZ::new(a, b)), BigInt::from(c))
            }))
        })
    }

    proptest! {
        #[test]
        fn int_group_ring_assoc_comm(x in arb_int_gr(), y in arb_int_gr(), z in arb_int_gr()) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }

        #[test]
        fn deformed_group_ring_assoc_comm(x in arb_def_gr(), y in arb_def_gr(), z in arb_def_gr()) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }

        #[test]
        fn sigma_after_rho_is_n(x in arb_def_gr(), n in 1u64..5) {
            prop_assert_eq!(x.rho_tilde(n).sigma(n), x.mul_int(n as i64));
            prop_assert_eq!(x.mul(&x).sigma(n), x.sigma(n).mul(&x.sigma(n)));
        }
    }
}
