//! Witt and ghost coordinates, and the Artin–Hasse correspondence with unit series.

use crate::exact::{QAlgebra, Rational, Ring, TruncSeries};
use crate::exact::arith::divisors;

/// Witt coordinates `x_1..x_N` of an element of `W(A)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WittVector<C: Ring = Rational> {
    pub x: Vec<C>,
}

/// Ghost coordinates `g_1..g_N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GhostVector<C: Ring = Rational> {
    pub g: Vec<C>,
}

impl<C: Ring> WittVector<C> {
    pub fn new(x: Vec<C>) -> Self {
        WittVector { x }
    }

    pub fn order(&self) -> usize {
        self.x.len()
    }

    /// Teichmüller representative `[a] = (a, 0, 0, ...)`.
    pub fn teichmuller(a: C, order: usize) -> Self {
        let mut x = vec![C::zero(); order];
        if order > 0 {
            x[0] = a;
        }
        WittVector { x }
    }
}

impl<C: Ring> GhostVector<C> {
    pub fn new(g: Vec<C>) -> Self {
        GhostVector { g }
    }

    pub fn order(&self) -> usize {
        self.g.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        GhostVector {
            g: self.g.iter().zip(&other.g).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GhostVector {
            g: self.g.iter().zip(&other.g).map(|(a, b)| a.mul(b)).collect(),
        }
    }
}

/// `g_n = sum_{d | n} d x_d^(n/d)`.
pub fn ghost_from_witt<C: Ring>(x: &WittVector<C>) -> GhostVector<C> {
    let n = x.order();
    let g = (1..=n)
        .map(|m| {
            divisors(m as u64).into_iter().fold(C::zero(), |acc, d| {
                let d = d as usize;
                acc.add(&x.x[d - 1].pow((m / d) as u64).mul_int(d as i64))
            })
        })
        .collect();
    GhostVector { g }
}

/// Inverts the ghost map by `x_n = (g_n - sum_{d | n, d < n} d x_d^(n/d)) / n`.
pub fn witt_from_ghost<C: QAlgebra>(g: &GhostVector<C>) -> WittVector<C> {
    let n = g.order();
    let mut x: Vec<C> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut s = g.g[m - 1].clone();
        for d in divisors(m as u64) {
            let d = d as usize;
            if d < m {
                s = s.sub(&x[d - 1].pow((m / d) as u64).mul_int(d as i64));
            }
        }
        x.push(s.div_int(m as i64));
    }
    WittVector { x }
}

/// `epsilon(x) = prod_n (1 - x_n t^n)^(-1)` to order `N`.
pub fn artin_hasse<C: Ring>(x: &WittVector<C>) -> TruncSeries<C> {
    let n = x.order();
    let mut f = TruncSeries::one(n);
    for (i, c) in x.x.iter().enumerate() {
        if !c.is_zero() {
            f = f.mul(&TruncSeries::geometric(c, i + 1, n));
        }
    }
    f
}

/// Inverse of [`artin_hasse`]: peels off one factor per degree.
pub fn series_to_witt<C: Ring>(f: &TruncSeries<C>) -> WittVector<C> {
    let n = f.order();
    let mut g = f.clone();
    let mut x = Vec::with_capacity(n);
    for m in 1..=n {
        let c = g.coeff(m).clone();
        if !c.is_zero() {
            g = g.mul(&TruncSeries::linear(&c, m, n));
        }
        x.push(c);
    }
    WittVector { x }
}

/// Ghost coordinates of a unit series: coefficients of `t d/dt log f`.
pub fn series_ghost<C: Ring>(f: &TruncSeries<C>) -> GhostVector<C> {
    GhostVector {
        g: f.ghost_components(),
    }
}

pub fn series_from_ghost<C: QAlgebra>(g: &GhostVector<C>) -> TruncSeries<C> {
    TruncSeries::from_ghost(&g.g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn w(v: &[i64]) -> WittVector {
        WittVector::new(v.iter().map(|&a| int(a)).collect())
    }

    fn gv(v: &[i64]) -> GhostVector {
        GhostVector::new(v.iter().map(|&a| int(a)).collect())
    }

    #[test]
    fn ghost_examples() {
        assert_eq!(ghost_from_witt(&w(&[1, 0, 0, 0])), gv(&[1, 1, 1, 1]));
        assert_eq!(ghost_from_witt(&w(&[5, 0, 0])), gv(&[5, 25, 125]));
        assert_eq!(ghost_from_witt(&w(&[2, 3, 0])), gv(&[2, 10, 8]));
    }

    #[test]
    fn unghost_examples() {
        assert_eq!(witt_from_ghost(&gv(&[1, 1, 1])), w(&[1, 0, 0]));
        // x_3 = (2 - 2^3) / 3
        assert_eq!(witt_from_ghost(&gv(&[2, 2, 2])), w(&[2, -1, -2]));
        assert_eq!(witt_from_ghost(&gv(&[6, 36, 216])), w(&[6, 0, 0]));
    }

    #[test]
    fn artin_hasse_examples() {
        assert_eq!(
            artin_hasse(&WittVector::teichmuller(rat(3, 2), 3)),
            TruncSeries::geometric(&rat(3, 2), 1, 3)
        );
        let f = artin_hasse(&w(&[1, 1, 0, 0]));
        assert_eq!(f.coeffs(), &[int(1), int(1), int(2), int(2), int(3)]);
        let one_plus_t = TruncSeries::from_tail(vec![int(1), int(0), int(0), int(0)]);
        let x = series_to_witt(&one_plus_t);
        assert_eq!(x, w(&[1, -1, 0, -1]));
        assert_eq!(artin_hasse(&x), one_plus_t);
    }

    #[test]
    fn series_ghost_matches_witt_ghost() {
        let x = WittVector::new(vec![rat(1, 2), int(-3), rat(2, 3), int(1), int(0), rat(-1, 5)]);
        assert_eq!(series_ghost(&artin_hasse(&x)), ghost_from_witt(&x));
        assert_eq!(series_to_witt(&series_from_ghost(&ghost_from_witt(&x))), x);
    }
}
