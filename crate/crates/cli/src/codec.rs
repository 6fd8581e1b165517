//! Conversions between JSON values and the core types.
//!
//! Rationals travel as strings `"p/q"` (or `"p"`); plain JSON integers are
//! accepted on input. Matrices are arrays of rows.

use std::collections::BTreeMap;

use csl_core::gauss::GaussFactorization;
use csl_core::{
    format_rational, parse_rational, EtaClass, Error, GaussInt, GaussRational, IntMatrix, Lattice,
    Matrix, QuadExt, QuadMatrix, RatMatrix, Rational, Result, SocFactorization,
    SosFactorization,
};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses command input: JSON when it parses, otherwise the trimmed text as a
/// JSON string so that bare literals like `1+i` work.
pub fn read_value(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|_| Value::String(text.trim().to_string()))
}

pub fn field<'a>(v: &'a Value, names: &[&str]) -> Result<&'a Value> {
    names
        .iter()
        .find_map(|n| v.get(n))
        .ok_or_else(|| parse_err(format!("missing field {:?}", names[0])))
}

/// A field if `v` is an object carrying it, otherwise `v` itself.
pub fn field_or_self<'a>(v: &'a Value, names: &[&str]) -> &'a Value {
    if v.is_object() {
        names.iter().find_map(|n| v.get(n)).unwrap_or(v)
    } else {
        v
    }
}

pub fn rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => Ok(Rational::from_integer(i.into())),
            (_, Some(u)) => Ok(Rational::from_integer(u.into())),
            _ => Err(parse_err(format!("{n} is not an exact number; write it as a \"p/q\" string"))),
        },
        other => Err(parse_err(format!("expected a rational, got {other}"))),
    }
}

pub fn integer(v: &Value) -> Result<BigInt> {
    let r = rational(v)?;
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(parse_err(format!("expected an integer, got {}", format_rational(&r))))
    }
}

pub fn u64_of(v: &Value) -> Result<u64> {
    integer(v)?.to_u64().ok_or_else(|| parse_err("expected a non-negative 64-bit integer"))
}

fn rows(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err("expected a matrix as an array of rows"))
}

fn matrix_of<T>(v: &Value, entry: impl Fn(&Value) -> Result<T>) -> Result<Matrix<T>> {
    let parsed = rows(v)?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| parse_err("matrix rows must be arrays"))?
                .iter()
                .map(&entry)
                .collect::<Result<Vec<T>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed)
}

pub fn rat_matrix(v: &Value) -> Result<RatMatrix> {
    matrix_of(v, rational)
}

pub fn int_matrix(v: &Value) -> Result<IntMatrix> {
    matrix_of(v, integer)
}

fn entry_text(v: &Value) -> Option<&str> {
    v.as_str().filter(|s| s.contains("sqrt"))
}

/// Whether any entry of the matrices mentions a square root.
pub fn mentions_sqrt(vs: &[&Value]) -> bool {
    vs.iter().any(|v| {
        rows(v).map_or(false, |r| {
            r.iter().any(|row| row.as_array().map_or(false, |xs| xs.iter().any(|x| entry_text(x).is_some())))
        })
    })
}

/// Matrices over one quadratic field; the radicand comes from the first entry
/// written with `sqrt(n)`, or `fallback` if there is none.
pub fn quad_matrices(vs: &[&Value], fallback: u64) -> Result<Vec<QuadMatrix>> {
    let mut n = None;
    for v in vs {
        for row in rows(v)? {
            for x in row.as_array().into_iter().flatten() {
                if let (None, Some(s)) = (n, entry_text(x)) {
                    n = Some(QuadExt::parse(s, None)?.radicand());
                }
            }
        }
    }
    let n = n.unwrap_or(fallback);
    vs.iter()
        .map(|v| {
            matrix_of(v, |x| match x {
                Value::String(s) => QuadExt::parse(s, Some(n)),
                other => QuadExt::from_rational(rational(other)?, n),
            })
        })
        .collect()
}

pub fn lattice(v: &Value) -> Result<Lattice> {
    match v {
        Value::String(name) => match name.as_str() {
            "Z2" => Ok(Lattice::cubic(2)),
            "Z3" => Ok(Lattice::cubic(3)),
            "Z4" => Ok(Lattice::cubic(4)),
            "hexagonal" | "A2" => Ok(Lattice::hexagonal()),
            other => Err(parse_err(format!("unknown lattice name {other:?}"))),
        },
        Value::Array(_) => Lattice::new(rat_matrix(v)?),
        Value::Object(_) => {
            let gram = rat_matrix(field(v, &["gram"])?)?;
            if let Some(d) = v.get("dim") {
                let d = u64_of(d)?;
                if d != gram.rows() as u64 {
                    return Err(Error::DimensionMismatch(format!(
                        "dim {d} with a {}x{} Gram matrix",
                        gram.rows(),
                        gram.cols()
                    )));
                }
            }
            Lattice::new(gram)
        }
        other => Err(parse_err(format!("expected a lattice, got {other}"))),
    }
}

pub fn gauss(v: &Value) -> Result<GaussInt> {
    match v {
        Value::String(s) => GaussInt::parse(s),
        Value::Number(_) => Ok(GaussInt::new(integer(v)?, 0)),
        Value::Object(_) => Ok(GaussInt::new(integer(field(v, &["re"])?)?, integer(field(v, &["im"])?)?)),
        other => Err(parse_err(format!("expected a Gaussian integer, got {other}"))),
    }
}

pub fn gauss_rational(v: &Value) -> Result<GaussRational> {
    match v {
        Value::String(s) => GaussRational::parse(s),
        _ => Ok(GaussRational::from_gauss(gauss(v)?)),
    }
}

pub fn eta_class(v: &Value) -> Result<EtaClass> {
    let n = integer(field_or_self(v, &["class"]))?;
    let n = n.to_biguint().ok_or_else(|| parse_err("square classes are positive"))?;
    EtaClass::from_squarefree(n)
}

pub fn exponent_map(v: &Value) -> Result<BTreeMap<u64, i64>> {
    let obj = v.as_object().ok_or_else(|| parse_err("factors must be an object"))?;
    obj.iter()
        .map(|(k, e)| {
            let p = csl_core::gauss::parse_prime_key(k)?;
            let e = integer(e)?.to_i64().ok_or_else(|| parse_err("exponent out of range"))?;
            Ok((p, e))
        })
        .collect()
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn matrix_json<T>(m: &Matrix<T>, entry: impl Fn(&T) -> Value) -> Value {
    Value::Array(
        (0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(&entry).collect())).collect(),
    )
}

pub fn rat_matrix_json(m: &RatMatrix) -> Value {
    matrix_json(m, rational_json)
}

pub fn int_matrix_json(m: &IntMatrix) -> Value {
    matrix_json(m, |x| Value::String(x.to_string()))
}

pub fn quad_matrix_json(m: &QuadMatrix) -> Value {
    matrix_json(m, |x| Value::String(x.to_string()))
}

/// Integers as JSON numbers while they fit, as strings beyond that.
pub fn int_json(n: &BigInt) -> Value {
    match (n.to_i64(), n.to_u64()) {
        (Some(i), _) => json!(i),
        (_, Some(u)) => json!(u),
        _ => Value::String(n.to_string()),
    }
}

pub fn uint_json(n: &BigUint) -> Value {
    int_json(&BigInt::from(n.clone()))
}

pub fn gauss_json(z: &GaussInt) -> Value {
    json!({ "re": z.re.to_string(), "im": z.im.to_string() })
}

fn exponents_json<E: Into<Value> + Copy>(m: &BTreeMap<u64, E>) -> Value {
    Value::Object(m.iter().map(|(p, &e)| (p.to_string(), e.into())).collect::<Map<_, _>>())
}

pub fn soc_json(f: &SocFactorization) -> Value {
    json!({
        "unit_exp": f.unit_exp,
        "factors": exponents_json(&f.factors),
        "sigma": int_json(&f.index()),
    })
}

pub fn sos_json(s: &SosFactorization, eta: &EtaClass) -> Value {
    json!({
        "eighth_exp": s.eighth_exp,
        "factors": exponents_json(&s.factors),
        "eta": uint_json(eta.squarefree_part()),
    })
}

pub fn gauss_factorization_json(f: &GaussFactorization) -> Value {
    let split: Map<String, Value> =
        f.split.iter().map(|(p, &(a, b))| (p.to_string(), json!([a, b]))).collect();
    json!({
        "unit_exp": f.unit_exp,
        "exp_1plusi": f.exp_1plusi,
        "split": split,
        "inert": exponents_json(&f.inert),
    })
}
