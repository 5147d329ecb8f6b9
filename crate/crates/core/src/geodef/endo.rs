//! The deformed endomorphisms on `R[Q/Z]` and the points-kind variants.

use num_bigint::BigInt;

use crate::exact::{GroupKey, GroupRingElem, QExpPoly, QmodZ, Rational, Ring};
use crate::geodef::graded::DeformedDivisor;

/// Rational divisors `Q[q^r][Q/Z]`, the target of the normalized `rho`.
pub type DeformedRatDivisor = GroupRingElem<QmodZ, QExpPoly<Rational>>;

/// `sigma^_(n,q)`: `q^r [e(r')] -> q^(nr) [e(nr')]`.
pub fn sigma_hat(x: &DeformedDivisor, n: u64) -> DeformedDivisor {
    x.sigma(n)
}

/// `rho^_(n,q)`: `q^r [e(r')] -> sum_(ns = r') q^(r/n) [e(s)]`, without `1/n`.
pub fn rho_hat(x: &DeformedDivisor, n: u64) -> DeformedDivisor {
    x.rho_tilde(n)
}

/// `rho_(n,q) = (1/n) rho^_(n,q)`, defined over the rationals.
pub fn rho_hat_rational(x: &DeformedDivisor, n: u64) -> DeformedRatDivisor {
    let xr: DeformedRatDivisor = x.map_coeffs(|p| p.map_coeffs(|c| <Rational as Ring>::from_bigint(c)));
    xr.rho(n)
}

/// Points-kind `sigma_(n,q)`: `q^k [e(r)] -> q^k [e(nr)]`, the `q`-exponent is untouched.
pub fn sigma_points(x: &DeformedDivisor, n: u64) -> DeformedDivisor {
    x.map_keys(|a| a.sigma(n))
}

/// Points-kind `rho~_n`: roots of the torsion part, `q`-exponent untouched.
pub fn rho_points(x: &DeformedDivisor, n: u64) -> DeformedDivisor {
    let mut out = DeformedDivisor::zero();
    for (a, c) in x.terms() {
        for s in a.roots(n) {
            out.add_term(s, c.clone());
        }
    }
    out
}

/// `E(r, r')` as an element of `R[Q/Z]` written on `Q/Z`.
pub fn e_gen(r: Rational, torsion: QmodZ) -> DeformedDivisor {
    DeformedDivisor::term(torsion, QExpPoly::monomial(BigInt::from(1), r))
}
