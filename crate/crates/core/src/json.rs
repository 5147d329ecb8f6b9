//! JSON encodings. Exact numbers are strings (`"p/q"`, `"a/b"` for torsion) so that they round-trip.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::bcalg::{BCElem, HabiroElem};
use crate::error::{Error, Result};
use crate::exact::{
    parse_rational, DeformedGenerator, Dilate, GroupRingElem, QExpPoly, QmodZ, Rational, Ring, TruncSeries,
};
use crate::geodef::{omega, DeformationKind, GradedW0Elem};
use crate::qsm::{CheckReport, Evaluation};
use crate::qwitt::{LambdaQElem, QWittVector, RescaledDivisor, SquareReport};
use crate::witt::{FactorList, GhostVector, W0Elem, WittVector};
use crate::zetageo::{Provenance, QValue, SymbolicFactor, ZetaFunction};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

pub trait FromJson: Sized {
    fn from_json(v: &Value) -> Result<Self>;
}

fn bad(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, got {v}"))
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name)
        .ok_or_else(|| Error::Parse(format!("missing field {name:?} in {v}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(what, v))
}

fn string<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| bad(what, v))
}

fn uint(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| bad(what, v))
}

fn float(v: &Value, what: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| bad(what, v))
}

fn vec_to_json<T: ToJson>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(ToJson::to_json).collect())
}

fn vec_from_json<T: FromJson>(v: &Value) -> Result<Vec<T>> {
    array(v, "array")?.iter().map(T::from_json).collect()
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl FromJson for Rational {
    fn from_json(v: &Value) -> Result<Self> {
        parse_rational(string(v, "rational string")?)
    }
}

impl ToJson for BigInt {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl FromJson for BigInt {
    fn from_json(v: &Value) -> Result<Self> {
        let s = string(v, "integer string")?;
        s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
    }
}

impl ToJson for QmodZ {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl FromJson for QmodZ {
    fn from_json(v: &Value) -> Result<Self> {
        QmodZ::parse(string(v, "torsion string")?)
    }
}

impl<C: Ring + ToJson> ToJson for QExpPoly<C> {
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(e, c)| json!({"coeff": c.to_json(), "qexp": e.to_json()}))
                .collect(),
        )
    }
}

impl<C: Ring + FromJson> FromJson for QExpPoly<C> {
    fn from_json(v: &Value) -> Result<Self> {
        let mut terms = Vec::new();
        for t in array(v, "q-polynomial")? {
            terms.push((Rational::from_json(field(t, "qexp")?)?, C::from_json(field(t, "coeff")?)?));
        }
        Ok(QExpPoly::from_terms(terms))
    }
}

impl ToJson for HabiroElem {
    fn to_json(&self) -> Value {
        json!({
            "level": self.level(),
            "depth": self.depth(),
            "poly": vec_to_json(self.poly()),
        })
    }
}

impl FromJson for HabiroElem {
    fn from_json(v: &Value) -> Result<Self> {
        let level = match field(v, "level")? {
            Value::Null => None,
            l => Some(uint(l, "level")? as u32),
        };
        HabiroElem::new(vec_from_json(field(v, "poly")?)?, level, uint(field(v, "depth")?, "depth")?)
    }
}

impl<C: Ring + ToJson> ToJson for GroupRingElem<QmodZ, C> {
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(t, c)| json!({"coeff": c.to_json(), "torsion": t.to_json()}))
                .collect(),
        )
    }
}

impl<C: Ring + FromJson> FromJson for GroupRingElem<QmodZ, C> {
    fn from_json(v: &Value) -> Result<Self> {
        let mut out = Self::zero();
        for t in array(v, "group ring element")? {
            out.add_term(QmodZ::from_json(field(t, "torsion")?)?, C::from_json(field(t, "coeff")?)?);
        }
        Ok(out)
    }
}

impl<C: Ring + ToJson> ToJson for GroupRingElem<DeformedGenerator, C> {
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(g, c)| json!({"coeff": c.to_json(), "torsion": g.torsion.to_json(), "qexp": g.qexp.to_json()}))
                .collect(),
        )
    }
}

impl<C: Ring + FromJson> FromJson for GroupRingElem<DeformedGenerator, C> {
    fn from_json(v: &Value) -> Result<Self> {
        let mut out = Self::zero();
        for t in array(v, "group ring element")? {
            let r = Rational::from_json(field(t, "qexp")?)?;
            if r < <Rational as Ring>::zero() {
                return Err(Error::Parse(format!("negative q-exponent {r}")));
            }
            let g = DeformedGenerator::new(r, QmodZ::from_json(field(t, "torsion")?)?);
            out.add_term(g, C::from_json(field(t, "coeff")?)?);
        }
        Ok(out)
    }
}

impl<C: Ring + ToJson> ToJson for TruncSeries<C> {
    fn to_json(&self) -> Value {
        json!({"order": self.order(), "coeffs": vec_to_json(self.coeffs())})
    }
}

impl<C: Ring + FromJson> FromJson for TruncSeries<C> {
    fn from_json(v: &Value) -> Result<Self> {
        let coeffs: Vec<C> = vec_from_json(field(v, "coeffs")?)?;
        let order = uint(field(v, "order")?, "order")? as usize;
        if coeffs.len() != order + 1 {
            return Err(Error::Parse(format!("order {order} with {} coefficients", coeffs.len())));
        }
        TruncSeries::new(coeffs)
    }
}

impl<C: Ring + ToJson> ToJson for WittVector<C> {
    fn to_json(&self) -> Value {
        json!({"x": vec_to_json(&self.x)})
    }
}

impl<C: Ring + FromJson> FromJson for WittVector<C> {
    fn from_json(v: &Value) -> Result<Self> {
        Ok(WittVector::new(vec_from_json(field(v, "x")?)?))
    }
}

impl<C: Ring + ToJson> ToJson for GhostVector<C> {
    fn to_json(&self) -> Value {
        json!({"g": vec_to_json(&self.g)})
    }
}

impl<C: Ring + FromJson> FromJson for GhostVector<C> {
    fn from_json(v: &Value) -> Result<Self> {
        Ok(GhostVector::new(vec_from_json(field(v, "g")?)?))
    }
}

impl ToJson for W0Elem {
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(a, m)| json!({"eigenvalue": a.to_json(), "multiplicity": m}))
            .collect();
        json!({"prime": self.prime(), "terms": terms})
    }
}

impl FromJson for W0Elem {
    fn from_json(v: &Value) -> Result<Self> {
        let mut pairs = Vec::new();
        for t in array(field(v, "terms")?, "terms")? {
            let m = field(t, "multiplicity")?.as_i64().ok_or_else(|| bad("multiplicity", t))?;
            pairs.push((QmodZ::from_json(field(t, "eigenvalue")?)?, m));
        }
        let e = W0Elem::from_pairs(pairs);
        match v.get("prime") {
            None | Some(Value::Null) => Ok(e),
            Some(p) => e.with_prime(uint(p, "prime")?),
        }
    }
}

impl ToJson for FactorList {
    fn to_json(&self) -> Value {
        Value::Array(
            self.factors()
                .map(|((a, k), e)| json!({"eigenvalue": a.to_json(), "degree": k, "exponent": e.to_json()}))
                .collect(),
        )
    }
}

impl FromJson for FactorList {
    fn from_json(v: &Value) -> Result<Self> {
        let mut pairs = Vec::new();
        for t in array(v, "factor list")? {
            let a = QmodZ::from_json(field(t, "eigenvalue")?)?;
            let k = uint(field(t, "degree")?, "degree")?;
            pairs.push(((a, k), BigInt::from_json(field(t, "exponent")?)?));
        }
        Ok(FactorList::from_pairs(pairs))
    }
}

impl ToJson for GradedW0Elem {
    fn to_json(&self) -> Value {
        let grades: Vec<Value> = self
            .terms()
            .map(|(g, e)| json!({"grade": g.to_json(), "element": e.to_json()}))
            .collect();
        json!({"kind": self.kind().name(), "grades": grades})
    }
}

impl FromJson for GradedW0Elem {
    fn from_json(v: &Value) -> Result<Self> {
        let kind = DeformationKind::parse(string(field(v, "kind")?, "kind")?)?;
        let mut out = GradedW0Elem::zero(kind);
        for t in array(field(v, "grades")?, "grades")? {
            let g = Rational::from_json(field(t, "grade")?)?;
            let e = W0Elem::from_json(field(t, "element")?)?;
            out = out.add(&omega(&e, &g, kind)?)?;
        }
        Ok(out)
    }
}

impl<X: Ring + Dilate + ToJson> ToJson for BCElem<X> {
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(a, x, b)| json!({"a": a, "b": b, "x": x.to_json()}))
            .collect();
        json!({"terms": terms})
    }
}

impl<X: Ring + Dilate + FromJson> FromJson for BCElem<X> {
    fn from_json(v: &Value) -> Result<Self> {
        let mut out = BCElem::zero();
        for t in array(field(v, "terms")?, "terms")? {
            let a = uint(field(t, "a")?, "a")?;
            let b = uint(field(t, "b")?, "b")?;
            if a == 0 || b == 0 {
                return Err(Error::Parse("monomial indices must be positive".into()));
            }
            out.add_monomial(a, X::from_json(field(t, "x")?)?, b);
        }
        Ok(out)
    }
}

impl ToJson for Evaluation {
    fn to_json(&self) -> Value {
        json!({
            "value": self.value,
            "errorBound": self.error_bound,
            "iterations": self.iterations,
            "converged": self.converged,
        })
    }
}

impl FromJson for Evaluation {
    fn from_json(v: &Value) -> Result<Self> {
        Ok(Evaluation {
            value: float(field(v, "value")?, "value")?,
            error_bound: float(field(v, "errorBound")?, "errorBound")?,
            iterations: uint(field(v, "iterations")?, "iterations")? as usize,
            converged: field(v, "converged")?.as_bool().ok_or_else(|| bad("boolean", v))?,
        })
    }
}

impl ToJson for CheckReport {
    fn to_json(&self) -> Value {
        json!({"name": self.name, "maxDeviation": self.max_deviation, "pass": self.pass})
    }
}

impl ToJson for SquareReport {
    fn to_json(&self) -> Value {
        json!({"square": self.square.name(), "pass": self.pass, "firstFailure": self.first_failure})
    }
}

impl ToJson for RescaledDivisor {
    fn to_json(&self) -> Value {
        json!({"raw": self.raw.to_json(), "rescaled": self.rescaled.to_json()})
    }
}

impl FromJson for RescaledDivisor {
    fn from_json(v: &Value) -> Result<Self> {
        Ok(RescaledDivisor {
            raw: FromJson::from_json(field(v, "raw")?)?,
            rescaled: FromJson::from_json(field(v, "rescaled")?)?,
        })
    }
}

impl ToJson for QWittVector {
    fn to_json(&self) -> Value {
        json!({"q": self.q(), "x": vec_to_json(&self.x)})
    }
}

impl FromJson for QWittVector {
    fn from_json(v: &Value) -> Result<Self> {
        QWittVector::new(uint(field(v, "q")?, "q")?, vec_from_json(field(v, "x")?)?)
    }
}

impl<C: Ring + ToJson> ToJson for LambdaQElem<C> {
    fn to_json(&self) -> Value {
        json!({"q": self.q(), "series": self.series.to_json()})
    }
}

impl<C: Ring + FromJson> FromJson for LambdaQElem<C> {
    fn from_json(v: &Value) -> Result<Self> {
        LambdaQElem::new(uint(field(v, "q")?, "q")?, TruncSeries::from_json(field(v, "series")?)?)
    }
}

impl ToJson for QValue {
    fn to_json(&self) -> Value {
        match self {
            QValue::Int(q) => json!(q),
            QValue::Formal => json!("formal"),
        }
    }
}

impl FromJson for QValue {
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) if s == "formal" => Ok(QValue::Formal),
            Value::Number(_) => Ok(QValue::Int(uint(v, "q")?)),
            _ => Err(bad("q", v)),
        }
    }
}

impl<C: Ring + ToJson> ToJson for Provenance<C> {
    fn to_json(&self) -> Value {
        match self {
            Provenance::Counts(c) => json!({"counts": vec_to_json(c)}),
            Provenance::Degrees(d) => json!({"degrees": vec_to_json(d)}),
            Provenance::Symbolic(f) => {
                let fs: Vec<Value> = f
                    .iter()
                    .map(|s| json!({"coeff": s.coeff.to_json(), "exponent": s.exponent}))
                    .collect();
                json!({"symbolic": fs})
            }
        }
    }
}

impl<C: Ring + FromJson> FromJson for Provenance<C> {
    fn from_json(v: &Value) -> Result<Self> {
        let obj: &Map<String, Value> = v.as_object().ok_or_else(|| bad("provenance", v))?;
        if let Some(c) = obj.get("counts") {
            return Ok(Provenance::Counts(vec_from_json(c)?));
        }
        if let Some(d) = obj.get("degrees") {
            return Ok(Provenance::Degrees(vec_from_json(d)?));
        }
        let f = obj.get("symbolic").ok_or_else(|| bad("provenance", v))?;
        let mut out = Vec::new();
        for t in array(f, "symbolic factors")? {
            out.push(SymbolicFactor {
                coeff: C::from_json(field(t, "coeff")?)?,
                exponent: field(t, "exponent")?.as_i64().ok_or_else(|| bad("exponent", t))?,
            });
        }
        Ok(Provenance::Symbolic(out))
    }
}

impl<C: Ring + ToJson> ToJson for ZetaFunction<C> {
    fn to_json(&self) -> Value {
        json!({
            "q": self.q.to_json(),
            "series": self.series.to_json(),
            "provenance": self.provenance.to_json(),
        })
    }
}

impl<C: Ring + FromJson> FromJson for ZetaFunction<C> {
    fn from_json(v: &Value) -> Result<Self> {
        Ok(ZetaFunction {
            q: QValue::from_json(field(v, "q")?)?,
            series: TruncSeries::from_json(field(v, "series")?)?,
            provenance: Provenance::from_json(field(v, "provenance")?)?,
        })
    }
}

/// Serializes to a compact string.
pub fn to_string<T: ToJson>(x: &T) -> String {
    x.to_json().to_string()
}

/// Parses from a string.
pub fn from_str<T: FromJson>(s: &str) -> Result<T> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    T::from_json(&v)
}
