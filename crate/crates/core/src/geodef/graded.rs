//! Graded `W_0` rings built from the `q^l`-points deformation and the affine-space deformation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{
    DeformedGenerator, DeformedRatGroupRing, GroupRingElem, QExpPoly, QmodZ, RatGroupRing, Rational, Ring,
    TruncSeries,
};
use crate::witt::W0Elem;

/// Which deformation a graded element belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum DeformationKind {
    /// Disjoint copies: grade `l` stands for `q^l` copies of the class.
    Points,
    /// Products with affine spaces: grade `r` rescales eigenvalues by `q^r`.
    Affine,
}

impl DeformationKind {
    pub fn name(&self) -> &'static str {
        match self {
            DeformationKind::Points => "points",
            DeformationKind::Affine => "affine",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "points" => Ok(DeformationKind::Points),
            "affine" => Ok(DeformationKind::Affine),
            _ => Err(Error::Parse(format!("unknown deformation kind {s:?}"))),
        }
    }
}

impl fmt::Display for DeformationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Divisors with coefficients in `Z[q^r]`, i.e. elements of `R[Q/Z]`.
pub type DeformedDivisor = GroupRingElem<QmodZ, QExpPoly<BigInt>>;

/// `sum_grade Omega_(q^grade)(e_grade)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedW0Elem {
    kind: DeformationKind,
    terms: BTreeMap<Rational, W0Elem>,
}

impl GradedW0Elem {
    pub fn zero(kind: DeformationKind) -> Self {
        GradedW0Elem {
            kind,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `(k, 1)` in grade 0.
    pub fn one(kind: DeformationKind) -> Self {
        omega(&W0Elem::one(), &Rational::from_integer(BigInt::from(0)), kind).expect("grade 0 is valid")
    }

    pub fn kind(&self) -> DeformationKind {
        self.kind
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &W0Elem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn grade(&self, r: &Rational) -> W0Elem {
        self.terms.get(r).cloned().unwrap_or_default()
    }

    fn add_at(&mut self, grade: Rational, e: &W0Elem) {
        let cur = self.terms.remove(&grade).unwrap_or_default();
        let sum = cur.add(e);
        if !sum.is_zero() {
            self.terms.insert(grade, sum);
        }
    }

    fn check_kind(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::MixedKinds(self.kind.to_string(), other.kind.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let mut out = self.clone();
        for (g, e) in &other.terms {
            out.add_at(g.clone(), e);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        GradedW0Elem {
            kind: self.kind,
            terms: self.terms.iter().map(|(g, e)| (g.clone(), e.neg())).collect(),
        }
    }
}

/// `Omega_(q^grade)(e)` as a single-grade element.
pub fn omega(e: &W0Elem, grade: &Rational, kind: DeformationKind) -> Result<GradedW0Elem> {
    if grade.is_negative() {
        return Err(Error::InvalidArgument(format!("negative grade {grade}")));
    }
    if kind == DeformationKind::Points && !grade.is_integer() {
        return Err(Error::NonIntegerGrade(grade.to_string()));
    }
    let mut out = GradedW0Elem::zero(kind);
    out.add_at(grade.clone(), e);
    Ok(out)
}

/// Grades add and `W_0` parts are tensored.
pub fn graded_mul(x: &GradedW0Elem, y: &GradedW0Elem) -> Result<GradedW0Elem> {
    x.check_kind(y)?;
    let mut out = GradedW0Elem::zero(x.kind);
    for (g, a) in &x.terms {
        for (h, b) in &y.terms {
            out.add_at(g + h, &a.tensor(b));
        }
    }
    Ok(out)
}

/// `F_n`: points kind keeps the grade, affine kind sends grade `r` to `nr`.
pub fn graded_frobenius(x: &GradedW0Elem, n: u64) -> GradedW0Elem {
    let nr = Rational::from_integer(BigInt::from(n));
    let mut out = GradedW0Elem::zero(x.kind);
    for (g, e) in &x.terms {
        let grade = match x.kind {
            DeformationKind::Points => g.clone(),
            DeformationKind::Affine => g * &nr,
        };
        out.add_at(grade, &e.frobenius(n));
    }
    out
}

/// `V_n`: points kind keeps the grade, affine kind sends grade `r` to `r/n`.
pub fn graded_verschiebung(x: &GradedW0Elem, n: u64) -> Result<GradedW0Elem> {
    let nr = Rational::from_integer(BigInt::from(n));
    let mut out = GradedW0Elem::zero(x.kind);
    for (g, e) in &x.terms {
        let grade = match x.kind {
            DeformationKind::Points => g.clone(),
            DeformationKind::Affine => g / &nr,
        };
        out.add_at(grade, &e.verschiebung(n)?);
    }
    Ok(out)
}

/// Grade `r` with class `e` contributes `q^r sum n(alpha) [alpha]`.
pub fn deformed_divisor(x: &GradedW0Elem) -> DeformedDivisor {
    let mut out = DeformedDivisor::zero();
    for (g, e) in &x.terms {
        for (a, m) in e.terms() {
            out.add_term(*a, QExpPoly::monomial(BigInt::from(*m), g.clone()));
        }
    }
    out
}

/// Points-kind series `prod_l L(e_l)^(q^l)` over `Q[Q/Z]` for a numeric `q`.
pub fn points_series(x: &GradedW0Elem, q: u64, order: usize) -> Result<TruncSeries<RatGroupRing>> {
    if x.kind != DeformationKind::Points {
        return Err(Error::KindMismatch("points series of an affine element".into()));
    }
    let mut f = TruncSeries::one(order);
    for (g, e) in &x.terms {
        let l = g.to_integer();
        let power = BigInt::from(q).pow(u32::try_from(l).map_err(|_| Error::InvalidArgument("grade too large".into()))?);
        f = f.mul(&e.l_factors().pow(&power).expand_group_ring(order));
    }
    Ok(f)
}

/// Affine-kind series `prod (1 - q^r alpha t)^(-n(alpha))` with `q` formal.
pub fn affine_series(x: &GradedW0Elem, order: usize) -> Result<TruncSeries<DeformedRatGroupRing>> {
    if x.kind != DeformationKind::Affine {
        return Err(Error::KindMismatch("affine series of a points element".into()));
    }
    let mut f = TruncSeries::one(order);
    for (g, e) in &x.terms {
        for (a, m) in e.terms() {
            let gen = DeformedRatGroupRing::basis(DeformedGenerator::new(g.clone(), *a));
            f = f.mul(&TruncSeries::geometric(&gen, 1, order).pow_int(*m));
        }
    }
    Ok(f)
}
