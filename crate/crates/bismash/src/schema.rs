//! Versioned JSON serialization of Hopf-algebra data with exact scalars.
//!
//! Coefficients are written as strings (rationals as `"num/den"`), so a
//! round trip through the schema is bit-exact. Structure constants are
//! stored sparsely: multiplication and comultiplication as `(i, j, k, c)`
//! quadruples, the antipode as `(i, j, c)` triples, unit and counit as
//! `(i, c)` pairs.

use crate::hopf::{AlgebraData, CoalgebraData, CounitLaws, HopfData, UnitLaws};
use crate::matchedpair::PartialMatchedPair;
use crate::partial::{PartialAction, PartialCoaction};
use crate::matrix::Matrix;
use crate::scalar::{ExtElem, ExtField, Gf, GfField, QField, Rat, Scalar};
use crate::MathError;
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use std::str::FromStr;

/// The schema version written by this crate.
pub const SCHEMA_VERSION: u32 = 1;

/// Errors raised while reading or writing the JSON schema.
#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Shape(String),
    #[error(transparent)]
    Math(#[from] MathError),
}

fn shape(msg: impl Into<String>) -> SchemaError {
    SchemaError::Shape(msg.into())
}

/// Exact JSON encoding and decoding for a scalar type and its field
/// descriptor.
pub trait ScalarCodec: Scalar {
    /// JSON form of the field descriptor, e.g. `"Q"` or `{"gf": 7}`.
    fn field_to_json(field: &Self::Field) -> Value;
    /// Inverse of [`ScalarCodec::field_to_json`].
    fn field_from_json(v: &Value) -> Result<Self::Field, SchemaError>;
    /// JSON form of an element; exact, never floating point.
    fn encode(&self) -> Value;
    /// Inverse of [`ScalarCodec::encode`], attaching to the given field.
    fn decode(v: &Value, field: &Self::Field) -> Result<Self, SchemaError>;
}

fn parse_big(s: &str) -> Result<BigInt, SchemaError> {
    BigInt::from_str(s.trim()).map_err(|_| shape(format!("bad integer {s:?}")))
}

fn rat_from_str(s: &str) -> Result<Rat, SchemaError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (parse_big(n)?, parse_big(d)?),
        None => (parse_big(s)?, BigInt::from(1)),
    };
    if den.is_zero() {
        return Err(shape(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::from_big(num, den))
}

fn rat_to_string(r: &Rat) -> String {
    let den = r.denom();
    if *den == BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), den)
    }
}

impl ScalarCodec for Rat {
    fn field_to_json(_field: &QField) -> Value {
        json!("Q")
    }

    fn field_from_json(v: &Value) -> Result<QField, SchemaError> {
        match v.as_str() {
            Some("Q") => Ok(QField),
            _ => Err(shape(format!("expected field \"Q\", found {v}"))),
        }
    }

    fn encode(&self) -> Value {
        Value::String(rat_to_string(self))
    }

    fn decode(v: &Value, _field: &QField) -> Result<Self, SchemaError> {
        let s = v
            .as_str()
            .ok_or_else(|| shape(format!("expected a rational string, found {v}")))?;
        rat_from_str(s)
    }
}

impl ScalarCodec for Gf {
    fn field_to_json(field: &GfField) -> Value {
        json!({ "gf": field.p })
    }

    fn field_from_json(v: &Value) -> Result<GfField, SchemaError> {
        let p = v
            .get("gf")
            .and_then(Value::as_u64)
            .ok_or_else(|| shape(format!("expected {{\"gf\": p}}, found {v}")))?;
        Ok(GfField::new(p))
    }

    fn encode(&self) -> Value {
        Value::String(self.value().to_string())
    }

    fn decode(v: &Value, field: &GfField) -> Result<Self, SchemaError> {
        let s = v
            .as_str()
            .ok_or_else(|| shape(format!("expected a residue string, found {v}")))?;
        let n = parse_big(s)?;
        let p = BigInt::from(field.p);
        let r = ((n % &p) + &p) % &p;
        let (_, digits) = r.to_u64_digits();
        Ok(Gf::new(*digits.first().unwrap_or(&0) as i64, field))
    }
}

impl ScalarCodec for ExtElem {
    fn field_to_json(field: &std::sync::Arc<ExtField>) -> Value {
        json!({ "ext": {
            "modulus": field.modulus.iter().map(rat_to_string).collect::<Vec<_>>(),
            "var": field.var,
        }})
    }

    fn field_from_json(v: &Value) -> Result<std::sync::Arc<ExtField>, SchemaError> {
        let ext = v
            .get("ext")
            .ok_or_else(|| shape(format!("expected {{\"ext\": …}}, found {v}")))?;
        let var = ext
            .get("var")
            .and_then(Value::as_str)
            .ok_or_else(|| shape("extension field is missing \"var\""))?;
        let modulus = ext
            .get("modulus")
            .and_then(Value::as_array)
            .ok_or_else(|| shape("extension field is missing \"modulus\""))?
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| shape("modulus coefficients must be strings"))
                    .and_then(rat_from_str)
            })
            .collect::<Result<Vec<_>, _>>()?;
        ExtField::new(modulus, var).map_err(shape)
    }

    fn encode(&self) -> Value {
        match self.field() {
            Some(f) => Value::Array(
                self.coords(&f)
                    .iter()
                    .map(|c| Value::String(rat_to_string(c)))
                    .collect(),
            ),
            // Unattached sentinels are integers in disguise.
            None => Value::Array(vec![Value::String(if self.is_zero() {
                "0".into()
            } else {
                "1".into()
            })]),
        }
    }

    fn decode(v: &Value, field: &std::sync::Arc<ExtField>) -> Result<Self, SchemaError> {
        let coords = v
            .as_array()
            .ok_or_else(|| shape(format!("expected a coordinate array, found {v}")))?
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| shape("coordinates must be strings"))
                    .and_then(rat_from_str)
            })
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() > field.degree() {
            return Err(shape(format!(
                "{} coordinates for a degree-{} extension",
                coords.len(),
                field.degree()
            )));
        }
        Ok(ExtElem::new(coords, field))
    }
}

fn unit_laws_str(u: UnitLaws) -> &'static str {
    match u {
        UnitLaws::TwoSided => "two-sided",
        UnitLaws::LeftOnly => "left-only",
        UnitLaws::RightOnly => "right-only",
    }
}

fn unit_laws_parse(s: &str) -> Result<UnitLaws, SchemaError> {
    match s {
        "two-sided" => Ok(UnitLaws::TwoSided),
        "left-only" => Ok(UnitLaws::LeftOnly),
        "right-only" => Ok(UnitLaws::RightOnly),
        _ => Err(shape(format!("unknown unit laws {s:?}"))),
    }
}

fn counit_laws_str(u: CounitLaws) -> &'static str {
    match u {
        CounitLaws::TwoSided => "two-sided",
        CounitLaws::RightOnly => "right-only",
        CounitLaws::LeftOnly => "left-only",
    }
}

fn counit_laws_parse(s: &str) -> Result<CounitLaws, SchemaError> {
    match s {
        "two-sided" => Ok(CounitLaws::TwoSided),
        "right-only" => Ok(CounitLaws::RightOnly),
        "left-only" => Ok(CounitLaws::LeftOnly),
        _ => Err(shape(format!("unknown counit laws {s:?}"))),
    }
}

fn vec_pairs<K: ScalarCodec>(v: &[K]) -> Value {
    Value::Array(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| json!([i, c.encode()]))
            .collect(),
    )
}

fn idx(v: &Value) -> Result<usize, SchemaError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| shape(format!("expected an index, found {v}")))
}

fn entry_array(v: &Value, arity: usize) -> Result<&Vec<Value>, SchemaError> {
    let arr = v
        .as_array()
        .ok_or_else(|| shape(format!("expected an array entry, found {v}")))?;
    if arr.len() != arity {
        return Err(shape(format!("expected {arity} components, found {}", arr.len())));
    }
    Ok(arr)
}

fn hopf_obj_to_json<K: ScalarCodec>(h: &HopfData<K>) -> Value {
    let dim = h.dim();
    let mut mult = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for (k, c) in h.algebra.entry(i, j) {
                mult.push(json!([i, j, k, c.encode()]));
            }
        }
    }
    let mut comult = Vec::new();
    for (i, row) in h.coalgebra.comult.iter().enumerate() {
        for (j, k, c) in row {
            comult.push(json!([i, j, k, c.encode()]));
        }
    }
    let antipode = h.antipode.as_ref().map(|s| {
        let mut triples = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                if !s[(i, j)].is_zero() {
                    triples.push(json!([i, j, s[(i, j)].encode()]));
                }
            }
        }
        Value::Array(triples)
    });
    json!({
        "name": h.name,
        "dim": dim,
        "labels": h.algebra.labels,
        "mult": mult,
        "unit": vec_pairs(&h.algebra.unit),
        "unit_laws": unit_laws_str(h.algebra.unit_laws),
        "comult": comult,
        "counit": vec_pairs(&h.coalgebra.counit),
        "counit_laws": counit_laws_str(h.coalgebra.counit_laws),
        "antipode": antipode,
    })
}

/// Serializes a Hopf (or bialgebra) presentation over the given field.
pub fn hopf_to_json<K: ScalarCodec>(h: &HopfData<K>, field: &K::Field) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "field": K::field_to_json(field),
        "hopf": hopf_obj_to_json(h),
    })
}

fn envelope_field<K: ScalarCodec>(v: &Value) -> Result<K::Field, SchemaError> {
    let version = v
        .get("schema_version")
        .and_then(Value::as_u64)
        .ok_or_else(|| shape("missing schema_version"))?;
    if version != SCHEMA_VERSION as u64 {
        return Err(shape(format!("unsupported schema version {version}")));
    }
    K::field_from_json(v.get("field").ok_or_else(|| shape("missing field"))?)
}

fn hopf_obj_from_json<K: ScalarCodec>(
    h: &Value,
    field: &K::Field,
) -> Result<HopfData<K>, SchemaError> {
    let name = h
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| shape("missing name"))?;
    let dim = h
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| shape("missing dim"))? as usize;
    if dim == 0 {
        return Err(shape("dim must be positive"));
    }
    let labels: Vec<String> = h
        .get("labels")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("missing labels"))?
        .iter()
        .map(|l| {
            l.as_str()
                .map(String::from)
                .ok_or_else(|| shape("labels must be strings"))
        })
        .collect::<Result<_, _>>()?;
    if labels.len() != dim {
        return Err(shape("label count does not match dim"));
    }

    let check_idx = |i: usize| -> Result<usize, SchemaError> {
        if i < dim {
            Ok(i)
        } else {
            Err(shape(format!("index {i} out of range for dim {dim}")))
        }
    };
    let entries = |key: &str| -> Result<&Vec<Value>, SchemaError> {
        h.get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| shape(format!("missing {key}")))
    };

    let mut mult = vec![Vec::new(); dim * dim];
    for e in entries("mult")? {
        let q = entry_array(e, 4)?;
        let (i, j, k) = (check_idx(idx(&q[0])?)?, check_idx(idx(&q[1])?)?, check_idx(idx(&q[2])?)?);
        mult[i * dim + j].push((k, K::decode(&q[3], field)?));
    }
    let mut unit = vec![K::zero(); dim];
    for e in entries("unit")? {
        let p = entry_array(e, 2)?;
        unit[check_idx(idx(&p[0])?)?] = K::decode(&p[1], field)?;
    }
    let unit_laws = unit_laws_parse(
        h.get("unit_laws")
            .and_then(Value::as_str)
            .ok_or_else(|| shape("missing unit_laws"))?,
    )?;

    let mut comult = vec![Vec::new(); dim];
    for e in entries("comult")? {
        let q = entry_array(e, 4)?;
        let (i, j, k) = (check_idx(idx(&q[0])?)?, check_idx(idx(&q[1])?)?, check_idx(idx(&q[2])?)?);
        comult[i].push((j, k, K::decode(&q[3], field)?));
    }
    let mut counit = vec![K::zero(); dim];
    for e in entries("counit")? {
        let p = entry_array(e, 2)?;
        counit[check_idx(idx(&p[0])?)?] = K::decode(&p[1], field)?;
    }
    let counit_laws = counit_laws_parse(
        h.get("counit_laws")
            .and_then(Value::as_str)
            .ok_or_else(|| shape("missing counit_laws"))?,
    )?;

    let antipode = match h.get("antipode") {
        None | Some(Value::Null) => None,
        Some(arr) => {
            let mut s = Matrix::zero(dim, dim);
            for e in arr
                .as_array()
                .ok_or_else(|| shape("antipode must be an array"))?
            {
                let t = entry_array(e, 3)?;
                let (i, j) = (check_idx(idx(&t[0])?)?, check_idx(idx(&t[1])?)?);
                s[(i, j)] = K::decode(&t[2], field)?;
            }
            Some(s)
        }
    };

    let hopf = HopfData {
        name: name.to_string(),
        algebra: AlgebraData {
            dim,
            mult,
            unit,
            labels,
            unit_laws,
        },
        coalgebra: CoalgebraData {
            dim,
            comult,
            counit,
            counit_laws,
        },
        antipode,
    };
    Ok(hopf)
}

/// Reads back a presentation written by [`hopf_to_json`], together with its
/// field descriptor.
pub fn hopf_from_json<K: ScalarCodec>(v: &Value) -> Result<(HopfData<K>, K::Field), SchemaError> {
    let field = envelope_field::<K>(v)?;
    let h = v.get("hopf").ok_or_else(|| shape("missing hopf object"))?;
    let hopf = hopf_obj_from_json(h, &field)?;
    Ok((hopf, field))
}

fn matrix_to_json<K: ScalarCodec>(m: &Matrix<K>) -> Value {
    let mut triples = Vec::new();
    for i in 0..m.rows {
        for j in 0..m.cols {
            if !m[(i, j)].is_zero() {
                triples.push(json!([i, j, m[(i, j)].encode()]));
            }
        }
    }
    json!({ "rows": m.rows, "cols": m.cols, "entries": triples })
}

fn matrix_from_json<K: ScalarCodec>(v: &Value, field: &K::Field) -> Result<Matrix<K>, SchemaError> {
    let rows = v
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or_else(|| shape("matrix is missing rows"))? as usize;
    let cols = v
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or_else(|| shape("matrix is missing cols"))? as usize;
    let mut m = Matrix::zero(rows, cols);
    for e in v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("matrix is missing entries"))?
    {
        let t = entry_array(e, 3)?;
        let (i, j) = (idx(&t[0])?, idx(&t[1])?);
        if i >= rows || j >= cols {
            return Err(shape(format!("matrix entry ({i},{j}) out of range")));
        }
        m[(i, j)] = K::decode(&t[2], field)?;
    }
    Ok(m)
}

fn opt_vec_to_json<K: ScalarCodec>(v: &Option<Vec<K>>) -> Value {
    match v {
        None => Value::Null,
        Some(v) => vec_pairs(v),
    }
}

fn opt_vec_from_json<K: ScalarCodec>(
    v: Option<&Value>,
    dim: usize,
    field: &K::Field,
) -> Result<Option<Vec<K>>, SchemaError> {
    let arr = match v {
        None | Some(Value::Null) => return Ok(None),
        Some(a) => a
            .as_array()
            .ok_or_else(|| shape("expected an array of (index, value) pairs"))?,
    };
    let mut out = vec![K::zero(); dim];
    for e in arr {
        let p = entry_array(e, 2)?;
        let i = idx(&p[0])?;
        if i >= dim {
            return Err(shape(format!("index {i} out of range for dim {dim}")));
        }
        out[i] = K::decode(&p[1], field)?;
    }
    Ok(Some(out))
}

/// Serializes a matched-pair candidate over the given field.
pub fn pair_to_json<K: ScalarCodec>(pair: &PartialMatchedPair<K>, field: &K::Field) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "field": K::field_to_json(field),
        "pair": {
            "name": pair.name,
            "h": hopf_obj_to_json(&pair.h),
            "l": hopf_obj_to_json(&pair.l),
            "action": matrix_to_json(&pair.action.act),
            "coaction": matrix_to_json(&pair.coaction.coact),
            "lambda": opt_vec_to_json(&pair.lambda),
            "z": opt_vec_to_json(&pair.z),
        }
    })
}

/// Reads back a matched-pair candidate written by [`pair_to_json`].
pub fn pair_from_json<K: ScalarCodec>(
    v: &Value,
) -> Result<(PartialMatchedPair<K>, K::Field), SchemaError> {
    let field = envelope_field::<K>(v)?;
    let p = v.get("pair").ok_or_else(|| shape("missing pair object"))?;
    let name = p
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| shape("missing name"))?;
    let h = hopf_obj_from_json::<K>(p.get("h").ok_or_else(|| shape("missing h"))?, &field)?;
    let l = hopf_obj_from_json::<K>(p.get("l").ok_or_else(|| shape("missing l"))?, &field)?;
    let act = matrix_from_json::<K>(
        p.get("action").ok_or_else(|| shape("missing action"))?,
        &field,
    )?;
    let coact = matrix_from_json::<K>(
        p.get("coaction").ok_or_else(|| shape("missing coaction"))?,
        &field,
    )?;
    let action = PartialAction::new(h.dim(), l.dim(), act)?;
    let coaction = PartialCoaction::new(h.dim(), l.dim(), coact)?;
    let mut pair = PartialMatchedPair::from_parts(name, h, l, action, coaction)?;
    pair.lambda = opt_vec_from_json::<K>(p.get("lambda"), pair.h.dim(), &field)?;
    pair.z = opt_vec_from_json::<K>(p.get("z"), pair.l.dim(), &field)?;
    Ok((pair, field))
}

/// Pretty-printed JSON text for a matched-pair candidate.
pub fn pair_to_string<K: ScalarCodec>(pair: &PartialMatchedPair<K>, field: &K::Field) -> String {
    serde_json::to_string_pretty(&pair_to_json(pair, field)).expect("value is valid JSON")
}

/// Parses JSON text written by [`pair_to_string`].
pub fn pair_from_str<K: ScalarCodec>(
    s: &str,
) -> Result<(PartialMatchedPair<K>, K::Field), SchemaError> {
    let v: Value = serde_json::from_str(s)?;
    pair_from_json(&v)
}

/// Pretty-printed JSON text for a presentation.
pub fn hopf_to_string<K: ScalarCodec>(h: &HopfData<K>, field: &K::Field) -> String {
    serde_json::to_string_pretty(&hopf_to_json(h, field)).expect("value is valid JSON")
}

/// Parses JSON text written by [`hopf_to_string`].
pub fn hopf_from_str<K: ScalarCodec>(s: &str) -> Result<(HopfData<K>, K::Field), SchemaError> {
    let v: Value = serde_json::from_str(s)?;
    hopf_from_json(&v)
}

/// Structural equality of two presentations: same constants, laws, labels
/// and antipode.
pub fn same_presentation<K: Scalar>(a: &HopfData<K>, b: &HopfData<K>) -> bool {
    let norm = |m: &[Vec<(usize, K)>]| -> Vec<Vec<(usize, K)>> {
        m.iter()
            .map(|row| {
                let mut r: Vec<(usize, K)> =
                    row.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
                r.sort_by_key(|(k, _)| *k);
                r
            })
            .collect()
    };
    let normc = |m: &[Vec<(usize, usize, K)>]| -> Vec<Vec<(usize, usize, K)>> {
        m.iter()
            .map(|row| {
                let mut r: Vec<(usize, usize, K)> =
                    row.iter().filter(|(_, _, c)| !c.is_zero()).cloned().collect();
                r.sort_by_key(|(j, k, _)| (*j, *k));
                r
            })
            .collect()
    };
    a.dim() == b.dim()
        && norm(&a.algebra.mult) == norm(&b.algebra.mult)
        && a.algebra.unit == b.algebra.unit
        && a.algebra.labels == b.algebra.labels
        && a.algebra.unit_laws == b.algebra.unit_laws
        && normc(&a.coalgebra.comult) == normc(&b.coalgebra.comult)
        && a.coalgebra.counit == b.coalgebra.counit
        && a.coalgebra.counit_laws == b.coalgebra.counit_laws
        && a.antipode == b.antipode
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QField;
    use crate::zoo;

    #[test]
    fn rational_hopf_data_round_trips_bit_exactly() {
        let h = zoo::h4::<Rat>(&QField).unwrap();
        let text = hopf_to_string(&h, &QField);
        let (back, field) = hopf_from_str::<Rat>(&text).unwrap();
        assert_eq!(field, QField);
        assert!(same_presentation(&h, &back));
        // A second trip produces identical text.
        assert_eq!(text, hopf_to_string(&back, &QField));
    }

    #[test]
    fn prime_field_and_extension_field_round_trips() {
        let g5 = GfField::new(5);
        let h = zoo::h16::<Gf>(&g5, &Gf::new(2, &g5)).unwrap();
        let (back, field) = hopf_from_str::<Gf>(&hopf_to_string(&h, &g5)).unwrap();
        assert_eq!(field.p, 5);
        assert!(same_presentation(&h, &back));

        let f = ExtField::gaussian();
        let he = zoo::h16::<ExtElem>(&f, &f.gen()).unwrap();
        let (back, field) = hopf_from_str::<ExtElem>(&hopf_to_string(&he, &f)).unwrap();
        assert_eq!(field.modulus, f.modulus);
        assert!(same_presentation(&he, &back));
    }

    #[test]
    fn pair_files_round_trip_including_lambda_and_z() {
        let pair = zoo::pair_by_name::<Rat>("4-2-c4", &QField).unwrap();
        let text = pair_to_string(&pair, &QField);
        let (back, _) = pair_from_str::<Rat>(&text).unwrap();
        assert_eq!(back.name, pair.name);
        assert_eq!(back.action.act, pair.action.act);
        assert_eq!(back.coaction.coact, pair.coaction.coact);
        assert_eq!(back.lambda, pair.lambda);
        assert_eq!(back.z, pair.z);
        assert!(same_presentation(&back.h, &pair.h));
        assert!(same_presentation(&back.l, &pair.l));
        assert_eq!(text, pair_to_string(&back, &QField));

        let adj = zoo::pair_adjoint_s3::<Rat>(&QField).unwrap();
        let (back, _) = pair_from_str::<Rat>(&pair_to_string(&adj, &QField)).unwrap();
        assert_eq!(back.action.act, adj.action.act);
        assert!(back.lambda.is_none() && back.z.is_none());
    }

    #[test]
    fn malformed_input_is_rejected_with_a_reason() {
        assert!(hopf_from_str::<Rat>("{").is_err());
        let err = hopf_from_str::<Rat>("{\"schema_version\": 99}").unwrap_err();
        assert!(err.to_string().contains("version"));
        let h = zoo::h4::<Rat>(&QField).unwrap();
        let mut v = hopf_to_json(&h, &QField);
        v["hopf"]["mult"][0][0] = serde_json::json!(17);
        assert!(hopf_from_json::<Rat>(&v).is_err());
    }
}
