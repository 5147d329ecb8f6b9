//! Zeta functions of varieties over `F_q` as elements of the big Witt ring.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::{Dilate, QAlgebra, QExpPoly, Rational, Ring, TruncSeries};
use crate::witt::witt_mul;
use crate::zetageo::necklace::{counts_to_degrees, degrees_to_counts};

/// The size of the base field: a concrete prime power or a formal variable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QValue {
    Int(u64),
    Formal,
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QValue::Int(q) => write!(f, "{q}"),
            QValue::Formal => f.write_str("formal"),
        }
    }
}

impl QValue {
    pub fn parse(s: &str) -> Result<Self> {
        if s == "formal" {
            return Ok(QValue::Formal);
        }
        let q: u64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("q must be an integer or \"formal\", got {s:?}")))?;
        if q < 2 {
            return Err(Error::InvalidArgument(format!("q must be at least 2, got {q}")));
        }
        Ok(QValue::Int(q))
    }
}

/// Coefficient rings that can hold powers of `q`.
pub trait ZetaCoeff: QAlgebra + Dilate {
    fn q_pow(q: QValue, r: &Rational) -> Result<Self>;
}

impl ZetaCoeff for Rational {
    fn q_pow(q: QValue, r: &Rational) -> Result<Self> {
        let QValue::Int(q) = q else {
            return Err(Error::MismatchedRing("formal q needs polynomial coefficients".into()));
        };
        if !r.is_integer() || r.is_negative() {
            return Err(Error::NotIntegral(format!("{q}^({r})")));
        }
        let e = r
            .to_integer()
            .to_u32()
            .ok_or_else(|| Error::InvalidArgument(format!("exponent {r} too large")))?;
        Ok(Rational::from_integer(BigInt::from(q).pow(e)))
    }
}

impl ZetaCoeff for QExpPoly<Rational> {
    fn q_pow(q: QValue, r: &Rational) -> Result<Self> {
        if q != QValue::Formal {
            return Err(Error::MismatchedRing("integer q needs rational coefficients".into()));
        }
        if r.is_negative() {
            return Err(Error::InvalidArgument(format!("negative exponent {r}")));
        }
        Ok(QExpPoly::q_pow(r.clone()))
    }
}

/// `(1 - c t)^(-e)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolicFactor<C> {
    pub coeff: C,
    pub exponent: i64,
}

/// How a zeta function was built; kept so that conversions are lossless.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Provenance<C> {
    /// Point counts `N_1..N_M`.
    Counts(Vec<C>),
    /// Numbers of closed points of each degree, `a_1..a_M`.
    Degrees(Vec<C>),
    /// A finite product of Teichmüller factors.
    Symbolic(Vec<SymbolicFactor<C>>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZetaFunction<C: Ring = Rational> {
    pub series: TruncSeries<C>,
    pub provenance: Provenance<C>,
    pub q: QValue,
}

fn symbolic_series<C: Ring>(factors: &[SymbolicFactor<C>], order: usize) -> TruncSeries<C> {
    factors.iter().fold(TruncSeries::one(order), |f, s| {
        f.mul(&TruncSeries::geometric(&s.coeff, 1, order).pow_int(s.exponent))
    })
}

impl<C: ZetaCoeff> ZetaFunction<C> {
    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// `N_m`, the ghost components of the series.
    pub fn counts(&self) -> Vec<C> {
        match &self.provenance {
            Provenance::Counts(c) => c[..self.order()].to_vec(),
            _ => self.series.ghost_components(),
        }
    }

    pub fn degrees(&self) -> Vec<C> {
        match &self.provenance {
            Provenance::Degrees(d) => d[..self.order()].to_vec(),
            _ => counts_to_degrees(&self.counts()),
        }
    }

    fn check_q(&self, other: &Self) -> Result<()> {
        match (self.q, other.q) {
            (QValue::Int(a), QValue::Int(b)) if a != b => Err(Error::MismatchedQ(a, b)),
            (a, b) if a != b => Err(Error::MismatchedRing("integer and formal q".into())),
            _ => Ok(()),
        }
    }
}

/// `Z = exp(sum N_m t^m / m)` from the first `N` counts.
pub fn zeta_from_counts<C: ZetaCoeff>(counts: &[C], q: QValue) -> ZetaFunction<C> {
    ZetaFunction {
        series: TruncSeries::from_ghost(counts),
        provenance: Provenance::Counts(counts.to_vec()),
        q,
    }
}

/// `Z = prod_r (1 - t^r)^(-a_r)`.
pub fn zeta_from_degrees<C: ZetaCoeff>(degrees: &[C], q: QValue) -> ZetaFunction<C> {
    let n = degrees.len();
    let series = degrees.iter().enumerate().fold(TruncSeries::one(n), |f, (i, a)| {
        f.mul(&TruncSeries::geometric(&C::one(), i + 1, n).pow_elem(a))
    });
    ZetaFunction {
        series,
        provenance: Provenance::Degrees(degrees.to_vec()),
        q,
    }
}

pub fn zeta_symbolic<C: ZetaCoeff>(factors: Vec<SymbolicFactor<C>>, q: QValue, order: usize) -> ZetaFunction<C> {
    ZetaFunction {
        series: symbolic_series(&factors, order),
        provenance: Provenance::Symbolic(factors),
        q,
    }
}

/// Whether every Möbius-inverted degree is an integer, as it is for a genuine scheme.
pub fn degrees_integral(degrees: &[Rational]) -> bool {
    degrees.iter().all(|a| a.is_integer())
}

/// `Z(A^l, t) = (1 - q^l t)^(-1)`.
pub fn zeta_affine<C: ZetaCoeff>(l: u64, q: QValue, order: usize) -> Result<ZetaFunction<C>> {
    tate_root(&Rational::from_integer(BigInt::from(l)), q, order)
}

/// `Z(P^n, t) = prod_{i=0}^n (1 - q^i t)^(-1)`.
pub fn zeta_projective<C: ZetaCoeff>(n: u64, q: QValue, order: usize) -> Result<ZetaFunction<C>> {
    let factors = (0..=n)
        .map(|i| {
            Ok(SymbolicFactor {
                coeff: C::q_pow(q, &Rational::from_integer(BigInt::from(i)))?,
                exponent: 1,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(zeta_symbolic(factors, q, order))
}

/// `Z(L^r, t) = (1 - q^r t)^(-1)` for rational `r >= 0`.
pub fn tate_root<C: ZetaCoeff>(r: &Rational, q: QValue, order: usize) -> Result<ZetaFunction<C>> {
    let factors = vec![SymbolicFactor {
        coeff: C::q_pow(q, r)?,
        exponent: 1,
    }];
    Ok(zeta_symbolic(factors, q, order))
}

/// The Witt element corresponding to `[n]_q`, namely `Z(P^(n-1))`.
pub fn q_integer_witt<C: ZetaCoeff>(n: u64, q: QValue, order: usize) -> Result<ZetaFunction<C>> {
    if n < 1 {
        return Err(Error::InvalidArgument("q-integer index must be positive".into()));
    }
    zeta_projective(n - 1, q, order)
}

/// `Z(X x Y) = Z(X) star Z(Y)`.
pub fn zeta_product<C: ZetaCoeff>(x: &ZetaFunction<C>, y: &ZetaFunction<C>) -> Result<ZetaFunction<C>> {
    x.check_q(y)?;
    let series = witt_mul(&x.series, &y.series);
    let n = series.order();
    let provenance = match (&x.provenance, &y.provenance) {
        (Provenance::Symbolic(a), Provenance::Symbolic(b)) => {
            let mut out = Vec::new();
            for s in a {
                for t in b {
                    out.push(SymbolicFactor {
                        coeff: s.coeff.mul(&t.coeff),
                        exponent: s.exponent * t.exponent,
                    });
                }
            }
            Provenance::Symbolic(out)
        }
        _ => {
            let (a, b) = (x.counts(), y.counts());
            Provenance::Counts((0..n).map(|i| a[i].mul(&b[i])).collect())
        }
    };
    Ok(ZetaFunction {
        series,
        provenance,
        q: x.q,
    })
}

/// `Z(X disjoint-union Y) = Z(X) +_w Z(Y)`.
pub fn zeta_disjoint_union<C: ZetaCoeff>(x: &ZetaFunction<C>, y: &ZetaFunction<C>) -> Result<ZetaFunction<C>> {
    x.check_q(y)?;
    let series = x.series.mul(&y.series);
    let n = series.order();
    let add = |a: &[C], b: &[C]| (0..n).map(|i| a[i].add(&b[i])).collect::<Vec<C>>();
    let provenance = match (&x.provenance, &y.provenance) {
        (Provenance::Symbolic(a), Provenance::Symbolic(b)) => {
            Provenance::Symbolic(a.iter().chain(b).cloned().collect())
        }
        (Provenance::Degrees(a), Provenance::Degrees(b)) => Provenance::Degrees(add(a, b)),
        _ => Provenance::Counts(add(&x.counts(), &y.counts())),
    };
    Ok(ZetaFunction {
        series,
        provenance,
        q: x.q,
    })
}

/// `Z(X x A^l, t) = Z(X, q^l t)`.
pub fn zeta_affine_shift<C: ZetaCoeff>(x: &ZetaFunction<C>, l: u64) -> Result<ZetaFunction<C>> {
    let ql = C::q_pow(x.q, &Rational::from_integer(BigInt::from(l)))?;
    let series = x.series.scale_variable(&ql);
    let provenance = match &x.provenance {
        Provenance::Symbolic(a) => Provenance::Symbolic(
            a.iter()
                .map(|s| SymbolicFactor {
                    coeff: s.coeff.mul(&ql),
                    exponent: s.exponent,
                })
                .collect(),
        ),
        _ => {
            let mut p = C::one();
            Provenance::Counts(
                x.counts()
                    .iter()
                    .map(|c| {
                        p = p.mul(&ql);
                        c.mul(&p)
                    })
                    .collect(),
            )
        }
    };
    Ok(ZetaFunction {
        series,
        provenance,
        q: x.q,
    })
}

/// Rebuilds the series from the provenance alone.
pub fn series_from_provenance<C: ZetaCoeff>(p: &Provenance<C>, order: usize) -> TruncSeries<C> {
    match p {
        Provenance::Counts(c) => TruncSeries::from_ghost(&c[..order]),
        Provenance::Degrees(d) => TruncSeries::from_ghost(&degrees_to_counts(&d[..order])),
        Provenance::Symbolic(f) => symbolic_series(f, order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::zetageo::necklace::necklace;
    use proptest::prelude::*;

    type QPoly = QExpPoly<Rational>;

    fn two() -> QValue {
        QValue::Int(2)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| int(a)).collect()
    }

    fn geo(a: i64, n: usize) -> TruncSeries {
        TruncSeries::geometric(&int(a), 1, n)
    }

    #[test]
    fn counts_and_degrees() {
        let z = zeta_from_counts(&ints(&[2, 4, 8, 16, 32]), two());
        assert_eq!(z.series, geo(2, 5));
        let pt = zeta_from_degrees(&ints(&[1, 0, 0, 0]), two());
        assert_eq!(pt.series, geo(1, 4));
        let p1 = zeta_from_counts(&ints(&[3, 5, 9, 17]), two());
        assert_eq!(p1.degrees(), ints(&[3, 1, 2, 3]));
        assert_eq!(p1.series, geo(1, 4).mul(&geo(2, 4)));
        assert!(degrees_integral(&p1.degrees()));
        assert!(!degrees_integral(&counts_to_degrees(&ints(&[0, 1]))));
        let d = zeta_from_degrees(&p1.degrees(), two());
        assert_eq!(d.series, p1.series);
        assert_eq!(series_from_provenance(&d.provenance, 4), p1.series);
    }

    #[test]
    fn affine_and_projective() {
        let a = zeta_affine::<Rational>(1, two(), 6).unwrap();
        assert_eq!(a.series, geo(2, 6));
        let p2 = zeta_projective::<Rational>(2, two(), 6).unwrap();
        assert_eq!(p2.series.coeff(1), &int(7));
        assert_eq!(p2.counts()[0], int(7));
        let sum = [0u32, 1, 2]
            .iter()
            .fold(TruncSeries::one(6), |f, &i| f.mul(&geo(2i64.pow(i), 6)));
        assert_eq!(p2.series, sum);
        let a9 = zeta_affine::<Rational>(2, QValue::Int(3), 4).unwrap();
        assert_eq!(a9.series, geo(9, 4));
    }

    #[test]
    fn products_and_unions() {
        let p1 = zeta_projective::<Rational>(1, two(), 6).unwrap();
        let sq = zeta_product(&p1, &p1).unwrap();
        let counts: Vec<Rational> = (1..=6).map(|m| int((2i64.pow(m) + 1).pow(2))).collect();
        assert_eq!(sq.series, zeta_from_counts(&counts, two()).series);
        let empty = zeta_from_counts(&ints(&[0, 0, 0, 0, 0, 0]), two());
        assert_eq!(zeta_disjoint_union(&p1, &empty).unwrap().series, p1.series);
        let shifted = zeta_affine_shift(&p1, 1).unwrap();
        assert_eq!(shifted.series, geo(2, 6).mul(&geo(4, 6)));
        let a1 = zeta_affine::<Rational>(1, two(), 6).unwrap();
        assert_eq!(shifted.series, zeta_product(&p1, &a1).unwrap().series);
        let other = zeta_affine::<Rational>(1, QValue::Int(3), 6).unwrap();
        assert_eq!(zeta_product(&p1, &other), Err(Error::MismatchedQ(2, 3)));
    }

    #[test]
    fn provenance_survives_operations() {
        let p1 = zeta_projective::<Rational>(1, two(), 6).unwrap();
        let counts = zeta_from_counts(&p1.counts(), two());
        let sq = zeta_product(&counts, &counts).unwrap();
        assert_eq!(series_from_provenance(&sq.provenance, 6), sq.series);
        let sh = zeta_affine_shift(&counts, 2).unwrap();
        assert_eq!(series_from_provenance(&sh.provenance, 6), sh.series);
        let sym = zeta_affine_shift(&p1, 2).unwrap();
        assert_eq!(series_from_provenance(&sym.provenance, 6), sym.series);
        let un = zeta_disjoint_union(&zeta_from_degrees(&ints(&[1, 2, 0]), two()), &zeta_from_degrees(&ints(&[0, 1, 1]), two())).unwrap();
        assert_eq!(un.provenance, Provenance::Degrees(ints(&[1, 3, 1])));
        assert_eq!(series_from_provenance(&un.provenance, 3), un.series);
    }

    #[test]
    fn q_integers() {
        for q in [2u64, 3] {
            for n in 1..=6u64 {
                let z = q_integer_witt::<Rational>(n, QValue::Int(q), 4).unwrap();
                let bracket: u64 = (0..n).map(|i| q.pow(i as u32)).sum();
                assert_eq!(z.counts()[0], int(bracket as i64));
                let a = TruncSeries::geometric(&int(5), 1, 4);
                let g = witt_mul(&z.series, &a).ghost_components();
                assert_eq!(g[0], int(5 * bracket as i64));
            }
        }
        assert_eq!(q_integer_witt::<Rational>(1, two(), 4).unwrap().series, geo(1, 4));
    }

    #[test]
    fn segre_square_is_not_projective() {
        let p1 = zeta_projective::<Rational>(1, two(), 6).unwrap();
        let sq = zeta_product(&p1, &p1).unwrap();
        assert_eq!(sq.counts()[0], int(9));
        for m in 0..=6 {
            let pm = zeta_projective::<Rational>(m, two(), 6).unwrap();
            assert_ne!(pm.series, sq.series);
        }
    }

    #[test]
    fn tate_roots_formal() {
        for n in 2..=3u64 {
            let z = tate_root::<QPoly>(&rat(1, n as i64), QValue::Formal, 5).unwrap();
            let mut p = z.series.clone();
            for _ in 1..n {
                p = witt_mul(&p, &z.series);
            }
            let l = zeta_affine::<QPoly>(1, QValue::Formal, 5).unwrap();
            assert_eq!(p, l.series);
        }
        assert!(tate_root::<Rational>(&rat(1, 2), two(), 4).is_err());
    }

    #[test]
    fn necklace_identity_formal() {
        let n = 10;
        let q = QPoly::q_pow(int(1));
        let lhs = TruncSeries::geometric(&q, 1, n);
        let degrees: Vec<QPoly> = (1..=n as u64).map(|r| necklace(&q, r)).collect();
        assert_eq!(zeta_from_degrees(&degrees, QValue::Formal).series, lhs);
    }

    #[test]
    fn points_deformation_decomposition() {
        // (1 - qt)^(-1) = (1 - t)^(-q) prod_{r > 1} (1 - t^r)^(-M(q, r))
        for q in [2i64, 3, 5] {
            let n = 16;
            let mut rhs = geo(1, n).pow_int(q);
            for r in 2..=n {
                let m = necklace(&int(q), r as u64);
                rhs = rhs.mul(&TruncSeries::geometric(&int(1), r, n).pow(&m));
            }
            assert_eq!(rhs, geo(q, n));
            assert_eq!(necklace(&int(q), 1), int(q));
        }
    }

    proptest! {
        #[test]
        fn ghost_of_counts_is_counts(v in prop::collection::vec(-9i64..10, 1..8)) {
            let c = ints(&v);
            let z = zeta_from_counts(&c, two());
            prop_assert_eq!(z.series.ghost_components(), c);
        }

        #[test]
        fn inclusion_exclusion(y in prop::collection::vec(0i64..10, 6), rest in prop::collection::vec(0i64..10, 6)) {
            let cy = ints(&y);
            let cx: Vec<Rational> = y.iter().zip(&rest).map(|(a, b)| int(a + b)).collect();
            let zx = zeta_from_counts(&cx, two());
            let zy = zeta_from_counts(&cy, two());
            let zr = zeta_from_counts(&ints(&rest), two());
            prop_assert_eq!(zeta_disjoint_union(&zy, &zr).unwrap().series, zx.series);
        }
    }
}
