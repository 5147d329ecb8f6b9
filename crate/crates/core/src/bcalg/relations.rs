//! The defining relations, checked on given generators.

use crate::bcalg::algebra::{bc_normalize, int_scalar, BCElem, BCGen};
use crate::exact::arith::gcd;
use crate::exact::{Dilate, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Checks every relation with `x` in the group ring and indices `n`, `m`.
///
/// The commutation of `mu~_n` and `mu_m^*` is only checked when `gcd(n, m) = 1`.
pub fn check_relations<X: Ring + Dilate>(x: &X, n: u64, m: u64) -> Vec<RelationCheck> {
    use BCGen::{Elem, Mu, MuStar};
    let xe = || Elem(x.clone());
    let w = |g: &[BCGen<X>]| bc_normalize(g);
    let mut out = vec![
        RelationCheck {
            name: "mu~_n x mu_n^* = rho~_n(x)",
            holds: w(&[Mu(n), xe(), MuStar(n)]) == BCElem::elem(x.rho(n)),
        },
        RelationCheck {
            name: "mu_n^* x = sigma_n(x) mu_n^*",
            holds: w(&[MuStar(n), xe()]) == w(&[Elem(x.sigma(n)), MuStar(n)]),
        },
        RelationCheck {
            name: "x mu~_n = mu~_n sigma_n(x)",
            holds: w(&[xe(), Mu(n)]) == w(&[Mu(n), Elem(x.sigma(n))]),
        },
        RelationCheck {
            name: "mu~_nm = mu~_n mu~_m",
            holds: w(&[Mu(n * m)]) == w(&[Mu(n), Mu(m)]),
        },
        RelationCheck {
            name: "mu_nm^* = mu_n^* mu_m^*",
            holds: w(&[MuStar(n * m)]) == w(&[MuStar(n), MuStar(m)]),
        },
        RelationCheck {
            name: "mu_n^* mu~_n = n",
            holds: w(&[MuStar(n), Mu(n)]) == int_scalar(n as i64),
        },
        RelationCheck {
            name: "sigma_n rho~_n = n",
            holds: x.rho(n).sigma(n) == x.mul_int(n as i64),
        },
    ];
    if gcd(n, m) == 1 {
        out.push(RelationCheck {
            name: "mu~_n mu_m^* = mu_m^* mu~_n for (n, m) = 1",
            holds: w(&[Mu(n), MuStar(m)]) == w(&[MuStar(m), Mu(n)]),
        });
    }
    out
}
