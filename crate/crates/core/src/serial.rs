//! JSON interchange formats.
//!
//! Rationals are strings `"p/q"` in lowest terms with `q > 0` (integers
//! too: `"3/1"`); parsing also accepts a bare integer string or a JSON
//! integer. Integers that fit in 53 bits are bare JSON numbers, larger ones
//! decimal strings. Factor indices in cohomology subsets are 0-based.
//!
//! | value            | shape                                                        |
//! |------------------|--------------------------------------------------------------|
//! | `Partition`      | `[2,2,2]`, `[]`                                              |
//! | `CohClass`       | `[{"subset":[0,2],"coeff":"1/1"}, …]`                        |
//! | `VirtualClass`   | `{"base":[2,3],"ch":<CohClass>}`                             |
//! | `BordismElement` | `[{"monomial":[2,4],"coeff":"1/1"}, …]`                      |
//! | `CharVector`     | `{"n":6,"values":[{"partition":[6],"value":"1/1"}, …]}`      |
//! | `CharMatrix`     | `{"n":6,"order":[…],"matrix":[[…]…],"det":12}`               |

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::charnum::CharMatrix;
use crate::cohomology::{self, SphereProduct};
use crate::partitions::Partition;
use crate::{bordism, kclass, Error, Rational, Result};

const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

/// `"p/q"` in lowest terms with positive denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// JSON number when within 53 bits, decimal string otherwise.
pub fn integer_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) if v.abs() <= MAX_SAFE_INTEGER => Value::from(v),
        _ => Value::String(n.to_string()),
    }
}

pub fn parse_integer_value(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(num) => num
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("not an integer: {num}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        other => Err(Error::Parse(format!("not an integer: {other}"))),
    }
}

/// Serde adapter for [`Rational`] fields.
pub mod rational_string {
    use super::*;

    pub fn serialize<Ser: Serializer>(q: &Rational, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        match Value::deserialize(d)? {
            Value::String(s) => parse_rational(&s).map_err(D::Error::custom),
            Value::Number(n) => n
                .as_i64()
                .map(|v| Rational::from_integer(v.into()))
                .ok_or_else(|| D::Error::custom(format!("not an exact rational: {n}"))),
            other => Err(D::Error::custom(format!("not a rational: {other}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CohTerm {
    subset: Vec<usize>,
    #[serde(with = "rational_string")]
    coeff: Rational,
}

fn coh_terms(c: &crate::CohClass) -> Vec<CohTerm> {
    c.terms()
        .map(|(set, q)| CohTerm { subset: cohomology::set_members(set), coeff: q.clone() })
        .collect()
}

fn coh_from_terms(base: &SphereProduct, terms: Vec<CohTerm>) -> Result<crate::CohClass> {
    let pairs = terms
        .into_iter()
        .map(|t| cohomology::set_from_members(&t.subset).map(|s| (s, t.coeff)))
        .collect::<Result<Vec<_>>>()?;
    crate::CohClass::from_terms(base, pairs)
}

/// The term list of a class; the base is carried separately.
impl Serialize for cohomology::CohClass<Rational> {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        coh_terms(self).serialize(s)
    }
}

impl cohomology::CohClass<Rational> {
    /// Parses the term list of a class on a known base.
    pub fn from_json(base: &SphereProduct, value: Value) -> Result<Self> {
        let terms: Vec<CohTerm> = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        coh_from_terms(base, terms)
    }
}

#[derive(Serialize, Deserialize)]
struct VirtualClassRecord {
    base: Vec<u32>,
    ch: Vec<CohTerm>,
}

impl Serialize for kclass::VirtualClass<Rational> {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        VirtualClassRecord { base: self.base().factor_degrees().to_vec(), ch: coh_terms(self.ch()) }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for kclass::VirtualClass<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = VirtualClassRecord::deserialize(d)?;
        let base = SphereProduct::new(rec.base).map_err(D::Error::custom)?;
        let ch = coh_from_terms(&base, rec.ch).map_err(D::Error::custom)?;
        kclass::VirtualClass::from_ch(ch).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct BordismTerm {
    monomial: Partition,
    #[serde(with = "rational_string")]
    coeff: Rational,
}

impl Serialize for bordism::BordismElement<Rational> {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let terms: Vec<BordismTerm> = self
            .terms()
            .map(|(p, c)| BordismTerm { monomial: p.clone(), coeff: c.clone() })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for bordism::BordismElement<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<BordismTerm>::deserialize(d)?;
        Ok(bordism::BordismElement::from_terms(terms.into_iter().map(|t| (t.monomial, t.coeff))))
    }
}

#[derive(Serialize, Deserialize)]
struct CharValue {
    partition: Partition,
    #[serde(with = "rational_string")]
    value: Rational,
}

#[derive(Serialize, Deserialize)]
struct CharVectorRecord {
    n: u32,
    values: Vec<CharValue>,
}

impl Serialize for bordism::CharVector<Rational> {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        CharVectorRecord {
            n: self.n(),
            values: self
                .iter()
                .map(|(p, v)| CharValue { partition: p.clone(), value: v.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for bordism::CharVector<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = CharVectorRecord::deserialize(d)?;
        let mut values = BTreeMap::new();
        for cv in rec.values {
            if values.insert(cv.partition.clone(), cv.value).is_some() {
                return Err(D::Error::custom(format!("duplicate partition {:?}", cv.partition)));
            }
        }
        bordism::CharVector::new(rec.n, values).map_err(D::Error::custom)
    }
}

/// `{"n", "order", "matrix", "det"}`.
pub fn char_matrix_json(mat: &CharMatrix) -> Value {
    let matrix: Vec<Value> = mat
        .entries()
        .iter()
        .map(|row| Value::Array(row.iter().map(integer_value).collect()))
        .collect();
    serde_json::json!({
        "n": mat.n(),
        "order": mat.order(),
        "matrix": matrix,
        "det": integer_value(&mat.determinant()),
    })
}

/// Reads back the output of [`char_matrix_json`] as `(n, order, entries, det)`.
pub fn parse_char_matrix_json(value: &Value) -> Result<(u32, Vec<Partition>, Vec<Vec<BigInt>>, BigInt)> {
    let field = |k: &str| value.get(k).ok_or_else(|| Error::Parse(format!("missing field {k:?}")));
    let n = field("n")?
        .as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| Error::Parse("bad n".into()))?;
    let order: Vec<Partition> =
        serde_json::from_value(field("order")?.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let matrix = field("matrix")?
        .as_array()
        .ok_or_else(|| Error::Parse("matrix is not an array".into()))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("row is not an array".into()))?
                .iter()
                .map(parse_integer_value)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let det = parse_integer_value(field("det")?)?;
    Ok((n, order, matrix, det))
}
