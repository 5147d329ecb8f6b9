//! Representations on `l^2(N)` and `l^2(N x Lambda)`, `Lambda = q^(Q+)`.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::Signed;

use crate::bcalg::BCElem;
use crate::error::{Error, Result};
use crate::exact::arith::gcd;
use crate::exact::ring::to_f64;
use crate::exact::{
    DeformedGroupRing, DeformedRatGroupRing, Dilate, IntGroupRing, QmodZ, RatGroupRing, Rational, Ring,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisKind {
    /// `epsilon_m`.
    Natural,
    /// `epsilon_(m, lambda)` with `lambda = q^r`.
    Deformed,
}

/// Finitely supported vector keyed by `(m, r)` for `epsilon_(m, q^r)`; `r = 0` in the natural kind.
#[derive(Clone, PartialEq, Debug)]
pub struct StateVector {
    kind: BasisKind,
    terms: BTreeMap<(u64, Rational), Complex64>,
}

impl StateVector {
    pub fn zero(kind: BasisKind) -> Self {
        StateVector {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(m: u64) -> Self {
        Self::basis_deformed(m, <Rational as Ring>::zero()).with_kind(BasisKind::Natural)
    }

    pub fn basis_deformed(m: u64, r: Rational) -> Self {
        assert!(m >= 1 && !r.is_negative());
        let mut v = Self::zero(BasisKind::Deformed);
        v.add_term(m, r, Complex64::new(1.0, 0.0));
        v
    }

    fn with_kind(mut self, kind: BasisKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational, Complex64)> {
        self.terms.iter().map(|((m, r), c)| (*m, r, *c))
    }

    pub fn add_term(&mut self, m: u64, r: Rational, c: Complex64) {
        *self.terms.entry((m, r)).or_insert(Complex64::new(0.0, 0.0)) += c;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, r, c) in other.terms() {
            out.add_term(m, r.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        StateVector {
            kind: self.kind,
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    /// `max |self_k - other_k|` over the union of supports.
    pub fn distance(&self, other: &Self) -> f64 {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
            .terms
            .values()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    fn map_terms(&self, f: impl Fn(u64, &Rational, Complex64) -> Option<(u64, Rational, Complex64)>) -> Self {
        let mut out = Self::zero(self.kind);
        for (m, r, c) in self.terms() {
            if let Some((m2, r2, c2)) = f(m, r, c) {
                out.add_term(m2, r2, c2);
            }
        }
        out
    }
}

/// A unit `alpha` of `Z^`, modelled by an integer coprime to every torsion order in use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Embedding {
    pub alpha: i64,
}

impl Default for Embedding {
    fn default() -> Self {
        Embedding { alpha: 1 }
    }
}

impl Embedding {
    /// `zeta_r^m = exp(2 pi i alpha m r)`, reduced exactly before the exponential.
    pub fn root_power(&self, r: &QmodZ, m: u64) -> Result<Complex64> {
        if gcd(self.alpha.unsigned_abs(), r.denom()) != 1 {
            return Err(Error::EmbeddingNotCoprime {
                alpha: self.alpha,
                order: r.denom(),
            });
        }
        let phase = r.phase_times(self.alpha as i128 * m as i128);
        Ok(Complex64::from_polar(1.0, std::f64::consts::TAU * phase))
    }
}

/// A homomorphism `h: Lambda -> R*_+` of the form `h(q^r) = base^r`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct WeightSpec {
    pub base: f64,
}

impl WeightSpec {
    /// `h(q^r) = [2]_q^r`, so that `h(lambda_1) = [p_1]_q`.
    pub fn standard(q: f64) -> Self {
        WeightSpec { base: 1.0 + q }
    }

    pub fn log_h(&self, r: &Rational) -> f64 {
        to_f64(r) * self.base.ln()
    }
}

/// Generators acting on state vectors.
#[derive(Clone, PartialEq, Debug)]
pub enum Op {
    /// The isometry `mu_n`.
    Mu(u64),
    MuStar(u64),
    /// `E(r, r') = q^r e(r')`; `e(r')` when `r = 0`.
    E { r: Rational, torsion: QmodZ },
    /// `omega_z(q^r)`.
    Omega { z: Complex64, lambda: Rational },
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Mu(n) => write!(f, "mu_{n}"),
            Op::MuStar(n) => write!(f, "mu_{n}^*"),
            Op::E { r, torsion } => write!(f, "E({r}, {torsion})"),
            Op::Omega { z, lambda } => write!(f, "omega_({z})(q^{lambda})"),
        }
    }
}

fn nth_root(r: &Rational, n: u64) -> Rational {
    r / Rational::from_integer(n.into())
}

/// Applies one generator.
pub fn apply(op: &Op, v: &StateVector, emb: &Embedding, weights: Option<&WeightSpec>) -> Result<StateVector> {
    let natural = v.kind == BasisKind::Natural;
    match op {
        Op::Mu(n) => Ok(v.map_terms(|m, r, c| Some((n * m, nth_root(r, *n), c)))),
        Op::MuStar(n) => Ok(v.map_terms(|m, r, c| {
            (m % n == 0).then(|| (m / n, r * Rational::from_integer((*n).into()), c))
        })),
        Op::E { r: s, torsion } => {
            if natural && !Ring::is_zero(s) {
                return Err(Error::KindMismatch(format!("E({s}, {torsion}) on the natural basis")));
            }
            let mut out = StateVector::zero(v.kind);
            for (m, r, c) in v.terms() {
                out.add_term(m, r + s, c * emb.root_power(torsion, m)?);
            }
            Ok(out)
        }
        Op::Omega { z, lambda } => {
            if natural {
                return Err(Error::KindMismatch("weight operators need the deformed basis".into()));
            }
            let w = weights.ok_or_else(|| Error::InvalidArgument("weight operators need a weight spec".into()))?;
            let lh = w.log_h(lambda);
            Ok(v.map_terms(|m, r, c| Some((m, r.clone(), c * (z * (m as f64 * lh)).exp()))))
        }
    }
}

/// Applies a word, rightmost generator first.
pub fn apply_word(ops: &[Op], v: &StateVector, emb: &Embedding, weights: Option<&WeightSpec>) -> Result<StateVector> {
    ops.iter().rev().try_fold(v.clone(), |acc, op| apply(op, &acc, emb, weights))
}

/// Group-ring elements that act diagonally: `(q-exponent, torsion, coefficient)`.
pub trait RepCoeffs: Ring + Dilate {
    fn rep_terms(&self) -> Vec<(Rational, QmodZ, f64)>;
}

impl RepCoeffs for IntGroupRing {
    fn rep_terms(&self) -> Vec<(Rational, QmodZ, f64)> {
        self.terms()
            .map(|(t, c)| (<Rational as Ring>::zero(), *t, to_f64(&<Rational as Ring>::from_bigint(c))))
            .collect()
    }
}

impl RepCoeffs for RatGroupRing {
    fn rep_terms(&self) -> Vec<(Rational, QmodZ, f64)> {
        self.terms().map(|(t, c)| (<Rational as Ring>::zero(), *t, to_f64(c))).collect()
    }
}

impl RepCoeffs for DeformedGroupRing {
    fn rep_terms(&self) -> Vec<(Rational, QmodZ, f64)> {
        self.terms()
            .map(|(g, c)| (g.qexp.clone(), g.torsion, to_f64(&<Rational as Ring>::from_bigint(c))))
            .collect()
    }
}

impl RepCoeffs for DeformedRatGroupRing {
    fn rep_terms(&self) -> Vec<(Rational, QmodZ, f64)> {
        self.terms().map(|(g, c)| (g.qexp.clone(), g.torsion, to_f64(c))).collect()
    }
}

/// `pi(mu~_a x mu_b^*) = a mu_a pi(x) mu_b^*`, extended linearly.
pub fn rep_apply<X: RepCoeffs>(a: &BCElem<X>, v: &StateVector, emb: &Embedding) -> Result<StateVector> {
    let mut out = StateVector::zero(v.kind);
    for (ma, x, mb) in a.terms() {
        let w = apply(&Op::MuStar(mb), v, emb, None)?;
        let mut xw = StateVector::zero(v.kind);
        for (r, t, c) in x.rep_terms() {
            xw = xw.add(&apply(&Op::E { r, torsion: t }, &w, emb, None)?.scale(Complex64::new(c, 0.0)));
        }
        out = out.add(&apply(&Op::Mu(ma), &xw, emb, None)?.scale(Complex64::new(ma as f64, 0.0)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn basis_actions() {
        let emb = Embedding::default();
        assert_eq!(apply(&Op::Mu(2), &StateVector::basis(3), &emb, None).unwrap(), StateVector::basis(6));
        let e = Op::E {
            r: int(0),
            torsion: QmodZ::new(1, 2),
        };
        let v = apply(&e, &StateVector::basis(3), &emb, None).unwrap();
        assert!(v.distance(&StateVector::basis(3).scale(c(-1.0))) < 1e-15);
        let w = apply(&Op::Mu(2), &StateVector::basis_deformed(3, rat(1, 2)), &emb, None).unwrap();
        assert_eq!(w, StateVector::basis_deformed(6, rat(1, 4)));
        assert!(apply(&Op::MuStar(2), &StateVector::basis(3), &emb, None)
            .unwrap()
            .terms()
            .next()
            .is_none());
    }

    #[test]
    fn kinds_and_embeddings() {
        let emb = Embedding { alpha: 3 };
        let e = Op::E {
            r: int(0),
            torsion: QmodZ::new(1, 6),
        };
        assert_eq!(
            apply(&e, &StateVector::basis(1), &emb, None),
            Err(Error::EmbeddingNotCoprime { alpha: 3, order: 6 })
        );
        let e = Op::E {
            r: int(1),
            torsion: QmodZ::ZERO,
        };
        assert!(matches!(apply(&e, &StateVector::basis(1), &emb, None), Err(Error::KindMismatch(_))));
        let phase = Embedding { alpha: 5 }.root_power(&QmodZ::new(1, 3), 1_000_000_007).unwrap();
        let expect = Complex64::from_polar(1.0, std::f64::consts::TAU * ((5 * 1_000_000_007i64) % 3) as f64 / 3.0);
        assert!((phase - expect).norm() < 1e-15);
    }
}
