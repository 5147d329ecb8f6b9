use serde_json::{json, Value};

use qbost_core::exact::{int, parse_rational, QExpPoly, Rational, TruncSeries};
use qbost_core::geodef::{
    deformed_divisor, graded_frobenius, graded_mul, graded_verschiebung, omega, DeformationKind, GradedW0Elem,
};
use qbost_core::json::{FromJson, ToJson};
use qbost_core::qsm::{covariance_check, partition_zq_system, zeta_q, zeta_q_euler, SystemKind, ZetaMode};
use qbost_core::qwitt::{delta_q_rescale, diagram_checks, star_q, LambdaQElem, QWittVector};
use qbost_core::witt::{
    artin_hasse, frobenius, ghost_from_witt, series_to_witt, verschiebung, witt_add, witt_from_ghost, witt_mul,
    GhostVector, W0Elem, WittVector,
};
use qbost_core::zetageo::{
    necklace, zeta_affine, zeta_affine_shift, zeta_disjoint_union, zeta_product, zeta_projective, QValue,
    ZetaCoeff, ZetaFunction,
};
use qbost_core::{Error, Result};

use crate::{bc, BcCmd, Command, GeodefCmd, Method, QsmCmd, QwittCmd, WittCmd, ZetaCmd};

type QPoly = QExpPoly<Rational>;

pub fn parse<T: FromJson>(s: &str) -> Result<T> {
    qbost_core::json::from_str(s)
}

fn parse_json(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

fn rationals(s: &str) -> Result<Vec<Rational>> {
    let v = parse_json(s)?;
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a JSON array, got {v}")))?;
    items.iter().map(Rational::from_json).collect()
}

fn witt_vector(s: &str) -> Result<WittVector> {
    Ok(WittVector::new(rationals(s)?))
}

pub fn run(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Witt(c) => witt(c),
        Command::Qwitt(c) => qwitt(c),
        Command::Geodef(c) => geodef(c),
        Command::Zeta(c) => zeta(c),
        Command::Bc(c) => match c {
            BcCmd::Normalize { ring, word } => bc::normalize(&ring.ring, word),
            BcCmd::Mul { ring, x, y } => bc::mul(&ring.ring, x, y),
        },
        Command::Qsm(c) => qsm(c),
    }
}

fn witt(cmd: &WittCmd) -> Result<Value> {
    let out = match cmd {
        WittCmd::Add(p) => {
            let (x, y) = (artin_hasse(&witt_vector(&p.x)?), artin_hasse(&witt_vector(&p.y)?));
            series_to_witt(&witt_add(&x, &y))
        }
        WittCmd::Mul(p) => {
            let (x, y) = (artin_hasse(&witt_vector(&p.x)?), artin_hasse(&witt_vector(&p.y)?));
            series_to_witt(&witt_mul(&x, &y))
        }
        WittCmd::Ghost { x } => return Ok(ghost_from_witt(&witt_vector(x)?).to_json()),
        WittCmd::Unghost { g } => witt_from_ghost(&GhostVector::new(rationals(g)?)),
        WittCmd::Frob { x, n } => {
            positive(*n as u64)?;
            series_to_witt(&frobenius(&artin_hasse(&witt_vector(x)?), *n))
        }
        WittCmd::Versch { x, n } => {
            positive(*n as u64)?;
            series_to_witt(&verschiebung(&artin_hasse(&witt_vector(x)?), *n))
        }
    };
    Ok(out.to_json())
}

fn positive(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok(())
}

fn qwitt(cmd: &QwittCmd) -> Result<Value> {
    match cmd {
        QwittCmd::Ghost { q, x } => Ok(QWittVector::new(*q, rationals(x)?)?.qghost().to_json()),
        QwittCmd::Mul { q, x, y } => {
            let a = QWittVector::new(*q, rationals(x)?)?;
            let b = QWittVector::new(*q, rationals(y)?)?;
            Ok(a.mul(&b)?.to_json())
        }
        QwittCmd::StarQ { q, a, b } => {
            let a = LambdaQElem::new(*q, parse::<TruncSeries>(a)?)?;
            let b = LambdaQElem::new(*q, parse::<TruncSeries>(b)?)?;
            Ok(star_q(&a, &b)?.to_json())
        }
        QwittCmd::Diagram { w0, q, n, order } => {
            positive(*n)?;
            let e: W0Elem = parse(w0)?;
            let reports = diagram_checks(&e, *q, *n, *order)?;
            let pass = reports.iter().all(|r| r.pass);
            Ok(json!({"pass": pass, "squares": reports.iter().map(ToJson::to_json).collect::<Vec<_>>()}))
        }
        QwittCmd::Rescale { w0, q } => Ok(delta_q_rescale(&parse(w0)?, *q)?.to_json()),
    }
}

fn geodef(cmd: &GeodefCmd) -> Result<Value> {
    let out = match cmd {
        GeodefCmd::Omega { w0, grade, kind } => {
            omega(&parse(w0)?, &parse_rational(grade)?, DeformationKind::parse(kind)?)?
        }
        GeodefCmd::Mul { x, y } => graded_mul(&parse(x)?, &parse(y)?)?,
        GeodefCmd::Frob { x, n } => {
            positive(*n)?;
            graded_frobenius(&parse(x)?, *n)
        }
        GeodefCmd::Versch { x, n } => {
            positive(*n)?;
            graded_verschiebung(&parse(x)?, *n)?
        }
        GeodefCmd::Divisor { x } => return Ok(deformed_divisor(&parse::<GradedW0Elem>(x)?).to_json()),
    };
    Ok(out.to_json())
}

fn is_formal(s: &str) -> Result<bool> {
    let v = parse_json(s)?;
    Ok(v.get("q").and_then(Value::as_str) == Some("formal"))
}

fn zeta_pair<C: ZetaCoeff + ToJson + FromJson>(
    x: &str,
    y: &str,
    f: fn(&ZetaFunction<C>, &ZetaFunction<C>) -> Result<ZetaFunction<C>>,
) -> Result<Value> {
    Ok(f(&parse(x)?, &parse(y)?)?.to_json())
}

fn zeta(cmd: &ZetaCmd) -> Result<Value> {
    match cmd {
        ZetaCmd::Affine { l, q, order } => match QValue::parse(q)? {
            QValue::Formal => Ok(zeta_affine::<QPoly>(*l, QValue::Formal, *order)?.to_json()),
            qv => Ok(zeta_affine::<Rational>(*l, qv, *order)?.to_json()),
        },
        ZetaCmd::Projective { n, q, order } => match QValue::parse(q)? {
            QValue::Formal => Ok(zeta_projective::<QPoly>(*n, QValue::Formal, *order)?.to_json()),
            qv => Ok(zeta_projective::<Rational>(*n, qv, *order)?.to_json()),
        },
        ZetaCmd::Product { x, y } => match (is_formal(x)?, is_formal(y)?) {
            (true, true) => zeta_pair::<QPoly>(x, y, zeta_product),
            (false, false) => zeta_pair::<Rational>(x, y, zeta_product),
            _ => Err(Error::MismatchedRing("integer and formal q".into())),
        },
        ZetaCmd::Union { x, y } => match (is_formal(x)?, is_formal(y)?) {
            (true, true) => zeta_pair::<QPoly>(x, y, zeta_disjoint_union),
            (false, false) => zeta_pair::<Rational>(x, y, zeta_disjoint_union),
            _ => Err(Error::MismatchedRing("integer and formal q".into())),
        },
        ZetaCmd::Shift { x, l } => {
            if is_formal(x)? {
                Ok(zeta_affine_shift(&parse::<ZetaFunction<QPoly>>(x)?, *l)?.to_json())
            } else {
                Ok(zeta_affine_shift(&parse::<ZetaFunction<Rational>>(x)?, *l)?.to_json())
            }
        }
        ZetaCmd::Necklace { q, order } => {
            let qv = QValue::parse(q)?;
            let values: Vec<Value> = match qv {
                QValue::Int(q) => (1..=*order as u64)
                    .map(|r| necklace(&int(q as i64), r).to_json())
                    .collect(),
                QValue::Formal => {
                    let x = QPoly::q_pow(int(1));
                    (1..=*order as u64).map(|r| necklace(&x, r).to_json()).collect()
                }
            };
            Ok(json!({"q": qv.to_json(), "values": values}))
        }
    }
}

fn qsm(cmd: &QsmCmd) -> Result<Value> {
    match cmd {
        QsmCmd::Zeta { q, s, tol, method } => {
            let mode = ZetaMode::for_q(*q);
            let e = match method {
                Method::Dirichlet => zeta_q(*s, *q, mode, *tol)?,
                Method::Euler => zeta_q_euler(*s, *q, mode, *tol)?,
            };
            Ok(e.to_json())
        }
        QsmCmd::Partition { q, beta, terms, tol } => Ok(partition_zq_system(*beta, *q, *terms, *tol)?.to_json()),
        QsmCmd::Check { system, t, samples, q } => {
            let kind = SystemKind::parse(system)?;
            let reports = covariance_check(kind, *q, *t, *samples)?;
            let pass = reports.iter().all(|r| r.pass);
            Ok(json!({
                "system": kind.name(),
                "t": t,
                "pass": pass,
                "checks": reports.iter().map(ToJson::to_json).collect::<Vec<_>>(),
            }))
        }
    }
}
