use num_traits::ToPrimitive;
use serde_json::Value;

use qbost_core::bcalg::{mu_rational, BCElem, HabiroElem, HabiroGroupRing};
use qbost_core::exact::{
    parse_rational, DeformedGenerator, DeformedGroupRing, Dilate, GroupRingElem, IntGroupRing, QmodZ,
    RatGroupRing, Rational, Ring,
};
use qbost_core::json::{FromJson, ToJson};
use qbost_core::{Error, Result};

use crate::commands::parse;

enum RingSpec {
    Z,
    Q,
    R,
    Habiro { level: u32, depth: u64 },
}

fn ring_spec(s: &str) -> Result<RingSpec> {
    match s {
        "Z" => Ok(RingSpec::Z),
        "Q" => Ok(RingSpec::Q),
        "R" => Ok(RingSpec::R),
        _ => {
            let bad = || Error::Parse(format!("ring must be Z, Q, R or habiro:N,D, got {s:?}"));
            let rest = s.strip_prefix("habiro:").ok_or_else(bad)?;
            let (n, d) = rest.split_once(',').ok_or_else(bad)?;
            let level: u32 = n.parse().map_err(|_| bad())?;
            let depth: u64 = d.parse().map_err(|_| bad())?;
            if level == 0 || depth == 0 {
                return Err(bad());
            }
            Ok(RingSpec::Habiro { level, depth })
        }
    }
}

/// One letter of a word, before choosing the coefficient ring.
enum Letter {
    Mu(u64),
    MuStar(u64),
    E(Rational, QmodZ),
}

fn letters(word: &str) -> Result<Vec<Letter>> {
    let v: Value = serde_json::from_str(word).map_err(|e| Error::Parse(e.to_string()))?;
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse("word must be a JSON array".into()))?;
    if items.is_empty() {
        return Err(Error::InvalidArgument("word must be non-empty".into()));
    }
    items.iter().map(letter).collect()
}

fn index(v: &Value) -> Result<u64> {
    match v.as_u64() {
        Some(n) if n >= 1 => Ok(n),
        _ => Err(Error::Parse(format!("expected a positive integer, got {v}"))),
    }
}

fn letter(v: &Value) -> Result<Letter> {
    let obj = v
        .as_object()
        .filter(|o| o.len() == 1)
        .ok_or_else(|| Error::Parse(format!("expected a single-key object, got {v}")))?;
    let (k, x) = obj.iter().next().expect("one entry");
    match k.as_str() {
        "mu" => Ok(Letter::Mu(index(x)?)),
        "mustar" => Ok(Letter::MuStar(index(x)?)),
        "e" => Ok(Letter::E(<Rational as Ring>::zero(), QmodZ::from_json(x)?)),
        "E" => {
            let pair = x
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse(format!("E takes [\"r\", \"a/b\"], got {x}")))?;
            let r = parse_rational(pair[0].as_str().ok_or_else(|| Error::Parse(format!("bad exponent {}", pair[0])))?)?;
            if r < <Rational as Ring>::zero() {
                return Err(Error::InvalidArgument(format!("negative q-exponent {r}")));
            }
            Ok(Letter::E(r, QmodZ::from_json(&pair[1])?))
        }
        _ => Err(Error::Parse(format!("unknown generator {k:?}"))),
    }
}

fn fold<X: Ring + Dilate>(
    letters: &[Letter],
    mu: impl Fn(u64) -> BCElem<X>,
    elem: impl Fn(&Rational, &QmodZ) -> Result<X>,
) -> Result<BCElem<X>> {
    let mut acc = BCElem::one();
    for l in letters {
        let g = match l {
            Letter::Mu(n) => mu(*n),
            Letter::MuStar(n) => BCElem::mu_star(*n),
            Letter::E(r, t) => BCElem::elem(elem(r, t)?),
        };
        acc = acc.mul(&g);
    }
    Ok(acc)
}

fn undeformed(r: &Rational) -> Result<()> {
    if Ring::is_zero(r) {
        Ok(())
    } else {
        Err(Error::MismatchedRing(format!("E({r}, .) needs the ring R or habiro")))
    }
}

fn habiro_coeff(r: &Rational, level: u32, depth: u64) -> Result<HabiroElem> {
    let k = r * Rational::from_integer(depth.into());
    if !k.is_integer() {
        return Err(Error::InvalidArgument(format!("q^({r}) is not on the lattice q^(1/{depth})")));
    }
    let k = k
        .to_integer()
        .to_usize()
        .ok_or_else(|| Error::InvalidArgument(format!("exponent {r} too large")))?;
    HabiroElem::monomial(k, Some(level), depth)
}

pub fn normalize(ring: &str, word: &str) -> Result<Value> {
    let ls = letters(word)?;
    match ring_spec(ring)? {
        RingSpec::Z => Ok(fold(&ls, BCElem::mu_tilde, |r, t| {
            undeformed(r)?;
            Ok(IntGroupRing::basis(*t))
        })?
        .to_json()),
        RingSpec::Q => Ok(fold(&ls, mu_rational::<RatGroupRing>, |r, t| {
            undeformed(r)?;
            Ok(RatGroupRing::basis(*t))
        })?
        .to_json()),
        RingSpec::R => Ok(fold(&ls, BCElem::mu_tilde, |r, t| {
            Ok(DeformedGroupRing::basis(DeformedGenerator::new(r.clone(), *t)))
        })?
        .to_json()),
        RingSpec::Habiro { level, depth } => Ok(fold(&ls, BCElem::mu_tilde, |r, t| {
            Ok(HabiroGroupRing::term(*t, habiro_coeff(r, level, depth)?))
        })?
        .to_json()),
    }
}

fn product<X: Ring + Dilate + ToJson + FromJson>(x: &str, y: &str) -> Result<Value> {
    let a: BCElem<X> = parse(x)?;
    let b: BCElem<X> = parse(y)?;
    Ok(a.mul(&b).to_json())
}

pub fn mul(ring: &str, x: &str, y: &str) -> Result<Value> {
    match ring_spec(ring)? {
        RingSpec::Z => product::<IntGroupRing>(x, y),
        RingSpec::Q => product::<RatGroupRing>(x, y),
        RingSpec::R => product::<GroupRingElem<DeformedGenerator, num_bigint::BigInt>>(x, y),
        RingSpec::Habiro { .. } => product::<HabiroGroupRing>(x, y),
    }
}
