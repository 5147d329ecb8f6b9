//! `[n]_q`, `{n}_q` and `v(n)`.

use num_bigint::BigInt;

use crate::exact::arith::factorize;

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_bracket(n: u64, q: f64) -> f64 {
    log_q_bracket(n, q).exp()
}

/// `log [n]_q`, stable near `q = 1` and for large `n`.
pub fn log_q_bracket(n: u64, q: f64) -> f64 {
    assert!(n >= 1 && q > 0.0);
    if q == 1.0 {
        return (n as f64).ln();
    }
    let d = q - 1.0;
    let l = n as f64 * d.ln_1p();
    if q > 1.0 {
        if l > 30.0 {
            l + (-(-l).exp_m1()).ln() - d.ln()
        } else {
            (l.exp_m1() / d).ln()
        }
    } else {
        (-l.exp_m1()).ln() - (-d).ln()
    }
}

/// `{n}_q = prod [p_i]_q^(a_i)` for `n = prod p_i^(a_i)`.
pub fn curly(n: u64, q: f64) -> f64 {
    log_curly(n, q).exp()
}

pub fn log_curly(n: u64, q: f64) -> f64 {
    factorize(n)
        .into_iter()
        .map(|(p, a)| a as f64 * log_q_bracket(p, q))
        .sum()
}

/// `v(n) = sum a_i (p_i - 1)`.
pub fn v(n: u64) -> u64 {
    factorize(n).into_iter().map(|(p, a)| a as u64 * (p - 1)).sum()
}

pub fn q_bracket_int(n: u64, q: &BigInt) -> BigInt {
    let mut s = BigInt::from(0);
    let mut p = BigInt::from(1);
    for _ in 0..n {
        s += &p;
        p *= q;
    }
    s
}

pub fn curly_int(n: u64, q: &BigInt) -> BigInt {
    factorize(n)
        .into_iter()
        .fold(BigInt::from(1), |acc, (p, a)| acc * q_bracket_int(p, q).pow(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(curly_int(6, &BigInt::from(2)), BigInt::from(21));
        assert!((curly(6, 2.0) - 21.0).abs() < 1e-12);
        assert_eq!(v(12), 4);
        assert_eq!(v(1), 0);
        assert_eq!(curly(1, 3.0), 1.0);
        assert!((q_bracket(5, 1.0) - 5.0).abs() < 1e-12);
        assert!((q_bracket(3, 0.5) - 1.75).abs() < 1e-12);
        assert!((log_q_bracket(2000, 2.0) - (2000.0 * 2f64.ln())).abs() < 1e-9);
        assert!((q_bracket(4, 1.0 + 1e-9) - 4.0).abs() < 1e-7);
    }

    proptest! {
        #[test]
        fn multiplicative(n in 1u64..500, m in 1u64..500, q in 2i64..6) {
            let q = BigInt::from(q);
            prop_assert_eq!(v(n * m), v(n) + v(m));
            prop_assert_eq!(curly_int(n * m, &q), curly_int(n, &q) * curly_int(m, &q));
        }

        #[test]
        fn float_matches_exact(n in 1u64..30, q in 2i64..6) {
            let exact = q_bracket_int(n, &BigInt::from(q)).to_string().parse::<f64>().unwrap();
            prop_assert!((q_bracket(n, q as f64) / exact - 1.0).abs() < 1e-12);
        }
    }
}
