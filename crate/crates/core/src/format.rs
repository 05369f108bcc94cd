//! Interchange formats.
//!
//! Classes serialize as
//! `{"schema":"motive-class/v1","genus":g,"lambda":{"<a>":{"<exp>":<int>}}}`
//! with keys in ascending numeric order. Integers are written as JSON numbers
//! of arbitrary length.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::jacobians::JacobianDecomposition;
use crate::lambda::MotiveClass;
use crate::laurent::LaurentInt;
use crate::macdonald::GradedRanks;
use crate::moduli::{PipelineReport, StageValue, WeightDiff};
use crate::realizations::{hodge_diamond, BiLaurentInt};

pub const CLASS_SCHEMA: &str = "motive-class/v1";
pub const REPORT_SCHEMA: &str = "pipeline-report/v1";
pub const JACOBIAN_SCHEMA: &str = "jacobian-decomp/v1";
pub const RANKS_SCHEMA: &str = "graded-ranks/v1";
pub const POLY_SCHEMA: &str = "laurent-poly/v1";
pub const HODGE_SCHEMA: &str = "hodge-poly/v1";

fn big(c: &BigInt) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("decimal integer is a JSON number"))
}

fn poly_json(p: &LaurentInt) -> Value {
    let mut m = Map::new();
    for (e, c) in p.terms() {
        m.insert(e.to_string(), big(c));
    }
    Value::Object(m)
}

pub fn class_to_json(x: &MotiveClass) -> Value {
    let mut lambda = Map::new();
    for (a, p) in x.components() {
        lambda.insert(a.to_string(), poly_json(p));
    }
    json!({
        "schema": CLASS_SCHEMA,
        "genus": x.genus(),
        "lambda": Value::Object(lambda),
    })
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| Error::Parse(format!("coefficient {n} is not an integer"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

fn parse_poly(v: &Value) -> Result<LaurentInt> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("polynomial must be an object".into()))?;
    let mut terms = Vec::with_capacity(obj.len());
    for (k, c) in obj {
        let e = k
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad exponent key {k:?}")))?;
        terms.push((e, parse_int(c)?));
    }
    Ok(LaurentInt::from_terms(terms))
}

fn expect_schema(v: &Value, schema: &str) -> Result<()> {
    match v.get("schema").and_then(Value::as_str) {
        Some(s) if s == schema => Ok(()),
        Some(s) => Err(Error::Parse(format!("expected schema {schema}, got {s}"))),
        None => Err(Error::Parse(format!("missing schema (expected {schema})"))),
    }
}

pub fn class_from_json(v: &Value) -> Result<MotiveClass> {
    expect_schema(v, CLASS_SCHEMA)?;
    let genus = v
        .get("genus")
        .and_then(Value::as_u64)
        .and_then(|g| u32::try_from(g).ok())
        .ok_or_else(|| Error::Parse("missing or invalid genus".into()))?;
    let lambda = v
        .get("lambda")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("missing lambda object".into()))?;
    let mut raw = Vec::with_capacity(lambda.len());
    for (k, p) in lambda {
        let a = k
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad λ-index key {k:?}")))?;
        raw.push((a, parse_poly(p)?));
    }
    MotiveClass::canonicalize(raw, genus)
}

pub fn class_from_str(s: &str) -> Result<MotiveClass> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    class_from_json(&v)
}

pub fn class_to_string(x: &MotiveClass) -> String {
    class_to_json(x).to_string()
}

pub fn poly_to_json(p: &LaurentInt, var: &str) -> Value {
    json!({ "schema": POLY_SCHEMA, "variable": var, "coeffs": poly_json(p) })
}

pub fn hodge_to_json(h: &BiLaurentInt) -> Value {
    let terms: Vec<Value> = h
        .terms()
        .map(|((p, q), c)| json!([p, q, big(c)]))
        .collect();
    json!({ "schema": HODGE_SCHEMA, "terms": terms })
}

pub fn ranks_to_json(r: &GradedRanks) -> Value {
    let mut m = Map::new();
    for (d, c) in r.iter() {
        m.insert(d.to_string(), big(&BigInt::from(c.clone())));
    }
    json!({ "schema": RANKS_SCHEMA, "ranks": Value::Object(m) })
}

/// Accepts either `{"schema":"graded-ranks/v1","ranks":{...}}` or a bare
/// `{"<degree>": rank}` map.
pub fn ranks_from_str(s: &str) -> Result<GradedRanks> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let map = match v.get("ranks") {
        Some(inner) => inner,
        None => &v,
    };
    let obj = map
        .as_object()
        .ok_or_else(|| Error::Parse("ranks must be an object".into()))?;
    let mut out = Vec::with_capacity(obj.len());
    for (k, c) in obj {
        let d = k
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad degree key {k:?}")))?;
        let r = parse_int(c)?
            .to_biguint()
            .ok_or_else(|| Error::Parse(format!("negative rank in degree {d}")))?;
        out.push((d, r));
    }
    Ok(GradedRanks::new(out))
}

pub fn ranks_to_csv(r: &GradedRanks) -> String {
    let mut out = String::from("degree,rank\n");
    for (d, c) in r.iter() {
        out.push_str(&format!("{d},{c}\n"));
    }
    out
}

pub fn hodge_diamond_csv(x: &MotiveClass) -> String {
    let mut out = String::from("weight,p,q,h\n");
    for row in hodge_diamond(x) {
        out.push_str(&format!("{},{},{},{}\n", row.weight, row.p, row.q, row.h));
    }
    out
}

pub fn jacobians_to_json(d: &JacobianDecomposition) -> Value {
    let factors: Vec<Value> = d.factors.iter().map(|&(a, m)| json!([a, m])).collect();
    json!({ "schema": JACOBIAN_SCHEMA, "i": d.index, "factors": factors })
}

fn diff_json(diffs: &[WeightDiff]) -> Value {
    Value::Array(
        diffs
            .iter()
            .map(|d| {
                json!({
                    "weight": d.weight,
                    "left": class_to_json(&d.left),
                    "right": class_to_json(&d.right),
                })
            })
            .collect(),
    )
}

pub fn report_to_json(r: &PipelineReport) -> Value {
    let stages: Vec<Value> = r
        .stages
        .iter()
        .map(|s| {
            let mut m = Map::new();
            m.insert("name".into(), Value::String(s.name.clone()));
            match &s.value {
                StageValue::Class(c) => m.insert("class".into(), class_to_json(c)),
                StageValue::Flag(f) => m.insert("flag".into(), Value::String(f.as_str().into())),
                StageValue::Diff(d) => m.insert("diff".into(), diff_json(d)),
            };
            Value::Object(m)
        })
        .collect();
    json!({
        "schema": REPORT_SCHEMA,
        "genus": r.genus,
        "degree": r.degree,
        "stages": stages,
    })
}

pub fn report_to_text(r: &PipelineReport) -> String {
    let mut out = format!("genus {} degree {}\n", r.genus, r.degree);
    for s in &r.stages {
        match &s.value {
            StageValue::Class(c) => out.push_str(&format!("{}: {}\n", s.name, c)),
            StageValue::Flag(f) => out.push_str(&format!("{}: {}\n", s.name, f.as_str())),
            StageValue::Diff(d) if d.is_empty() => out.push_str(&format!("{}: agree\n", s.name)),
            StageValue::Diff(d) => {
                out.push_str(&format!("{}: {} weight(s) differ\n", s.name, d.len()));
                for w in d {
                    out.push_str(&format!("  weight {}: {} vs {}\n", w.weight, w.left, w.right));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_json_shape() {
        let x = MotiveClass::canonicalize(
            [(0, LaurentInt::from_dense(-1, &[1, 0, 2])), (1, LaurentInt::power(1))],
            2,
        )
        .unwrap();
        let s = class_to_string(&x);
        assert_eq!(
            s,
            r#"{"schema":"motive-class/v1","genus":2,"lambda":{"0":{"-1":1,"1":2},"1":{"1":1}}}"#
        );
        assert_eq!(class_from_str(&s).unwrap(), x);
    }

    #[test]
    fn big_coefficients_survive() {
        let c: BigInt = "123456789012345678901234567890".parse().unwrap();
        let x = MotiveClass::tate(3, LaurentInt::monomial(4, c));
        assert_eq!(class_from_str(&class_to_string(&x)).unwrap(), x);
    }

    #[test]
    fn non_canonical_input_is_folded() {
        let s = r#"{"schema":"motive-class/v1","genus":2,"lambda":{"3":{"0":1}}}"#;
        assert_eq!(class_from_str(s).unwrap(), MotiveClass::monomial(2, 1, 1, 1).unwrap());
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(class_from_str(r#"{"schema":"other","genus":2,"lambda":{}}"#).is_err());
        assert!(class_from_str(r#"{"schema":"motive-class/v1","genus":2,"lambda":{"9":{"0":1}}}"#).is_err());
        assert!(class_from_str(r#"{"schema":"motive-class/v1","genus":2,"lambda":{"0":{"0":1.5}}}"#).is_err());
        assert!(class_from_str("not json").is_err());
    }

    #[test]
    fn ranks_formats() {
        let r = ranks_from_str(r#"{"0":1,"1":4,"2":1}"#).unwrap();
        assert_eq!(r, GradedRanks::curve(2));
        assert_eq!(ranks_from_str(&ranks_to_json(&r).to_string()).unwrap(), r);
        assert_eq!(ranks_to_csv(&r), "degree,rank\n0,1\n1,4\n2,1\n");
    }
}
