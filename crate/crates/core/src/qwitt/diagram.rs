//! Checks that `L^q` commutes with the ghost map, Frobenius and Verschiebung.

use num_bigint::BigInt;

use crate::error::Result;
use crate::exact::{RatGroupRing, Ring};
use crate::qwitt::aqt::{iota_q, AqtSeries};
use crate::qwitt::lambda_q::{lq, lq_factors};
use crate::witt::{frobenius, W0Elem};

pub const COMPLEX_TOL: f64 = 1e-9;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Square {
    Ghost,
    Frobenius,
    Verschiebung,
}

impl Square {
    pub fn name(&self) -> &'static str {
        match self {
            Square::Ghost => "ghost",
            Square::Frobenius => "frobenius",
            Square::Verschiebung => "verschiebung",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct SquareReport {
    pub square: Square,
    pub pass: bool,
    /// Index of the first coefficient that disagrees.
    pub first_failure: Option<usize>,
}

impl SquareReport {
    fn from_first(square: Square, first_failure: Option<usize>) -> Self {
        SquareReport {
            square,
            pass: first_failure.is_none(),
            first_failure,
        }
    }
}

fn first_mismatch<T: PartialEq>(a: &[T], b: &[T]) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// `iota^q(gh(e))` against `d/dt log L^q(e)`, exact in `Q[Q/Z]`.
pub fn check_ghost_square(e: &W0Elem, q: u64, order: usize) -> SquareReport {
    let gh: Vec<RatGroupRing> = e
        .ghost(order)
        .iter()
        .map(|x| x.map_coeffs(|c| <crate::exact::Rational as Ring>::from_bigint(c)))
        .collect();
    let lhs = iota_q(&gh, q);
    let series = lq(e, q, order).series;
    // coefficient of t^(m-1) in f'/f is the m-th coefficient of t f'/f
    let rhs = AqtSeries::new(q, series.ghost_components());
    SquareReport::from_first(Square::Ghost, first_mismatch(&lhs.coeffs, &rhs.coeffs))
}

/// `F_n(L^q(e))` against `L^q(F_n e)`, exact in `Q[Q/Z]`.
pub fn check_frobenius_square(e: &W0Elem, q: u64, n: u64, order: usize) -> SquareReport {
    let lhs = frobenius(&lq(e, q, order).series, n as usize);
    let rhs = lq(&e.frobenius(n), q, lhs.order()).series;
    SquareReport::from_first(Square::Frobenius, first_mismatch(lhs.coeffs(), rhs.coeffs()))
}

/// `L^q(V_n e)` against `V_n(L^q(e))`.
///
/// The two sides only agree after using `prod_{w^n = a} (1 - w t) = 1 - a t^n`,
/// so the comparison is made numerically on complex expansions and exactly on
/// normalized factor lists; both must agree. The numeric tolerance is relative
/// to the largest coefficient seen so far.
pub fn check_verschiebung_square(e: &W0Elem, q: u64, n: u64, order: usize) -> Result<SquareReport> {
    let ve = e.verschiebung(n)?;
    let qb = BigInt::from(q);
    let lhs = ve.l_factors().pow(&qb).expand_complex(order);
    let rhs = lq_factors(e, q)
        .expand_complex(order)
        .substitute_power(n as usize)
        .truncate(order);
    let mut scale = 1.0f64;
    let numeric = lhs.coeffs().iter().zip(rhs.coeffs()).position(|(a, b)| {
        scale = scale.max(a.norm()).max(b.norm());
        (a - b).norm() >= COMPLEX_TOL * scale
    });
    let exact_ok = lq_factors(&ve, q) == lq_factors(e, q).verschiebung(n).normalize();
    let first = match (numeric, exact_ok) {
        (Some(i), _) => Some(i),
        (None, false) => Some(0),
        (None, true) => None,
    };
    Ok(SquareReport::from_first(Square::Verschiebung, first))
}

/// Runs the three squares for `e`, `q`, `n` to order `N`.
pub fn diagram_checks(e: &W0Elem, q: u64, n: u64, order: usize) -> Result<Vec<SquareReport>> {
    Ok(vec![
        check_ghost_square(e, q, order),
        check_frobenius_square(e, q, n, order),
        check_verschiebung_square(e, q, n, order)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QmodZ;

    #[test]
    fn simple_classes_pass() {
        let a = W0Elem::eigenvalue(QmodZ::new(1, 3), 1);
        for r in diagram_checks(&a, 2, 2, 8).unwrap() {
            assert!(r.pass, "{:?}", r);
        }
        for r in diagram_checks(&W0Elem::zero(), 3, 3, 6).unwrap() {
            assert!(r.pass);
        }
        let b = W0Elem::from_pairs([(QmodZ::new(1, 4), -1), (QmodZ::new(2, 5), 2)]);
        for r in diagram_checks(&b, 3, 4, 8).unwrap() {
            assert!(r.pass, "{:?}", r);
        }
    }

    #[test]
    fn detects_a_wrong_square() {
        // Frobenius with the wrong power must be caught.
        let e = W0Elem::eigenvalue(QmodZ::new(1, 5), 1);
        let lhs = frobenius(&lq(&e, 2, 6).series, 2);
        let rhs = lq(&e.frobenius(3), 2, lhs.order()).series;
        assert_eq!(first_mismatch(lhs.coeffs(), rhs.coeffs()), Some(1));
    }
}
