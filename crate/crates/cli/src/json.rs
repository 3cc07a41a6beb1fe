//! Conversions between core values and their JSON encodings.
//!
//! Integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; both forms are accepted on input.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use relchow::abgroup::{FgAbGroup, GroupExpr, IntMatrix, Symbol};
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use serde_json::{json, Value};

/// Arbitrary-precision integer as it appears in input documents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IntVisitor;
        impl Visitor<'_> for IntVisitor {
            type Value = Int;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
                Ok(Int(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
                Ok(Int(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
                v.trim()
                    .parse::<BigInt>()
                    .map(Int)
                    .map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }
        d.deserialize_any(IntVisitor)
    }
}

pub fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(small) => Value::from(small),
        None => Value::String(n.to_string()),
    }
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(int_to_json).collect()))
            .collect(),
    )
}

/// Builds a matrix from nested rows; `cols` fixes the width when there are no rows.
pub fn matrix_from_rows(rows: &[Vec<Int>], cols: usize) -> Result<IntMatrix, relchow::Error> {
    let rows = rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
    IntMatrix::try_from_rows(rows, cols)
}

/// Serialized symbolic summand.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SymbolDoc {
    pub name: String,
    #[serde(default)]
    pub qualifier: Option<String>,
}

/// Serialized group: `{"rank": r, "torsion": [d1, ...], "symbols": [...]}`.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    #[serde(default)]
    pub rank: usize,
    #[serde(default)]
    pub torsion: Vec<Int>,
    #[serde(default)]
    pub symbols: Vec<SymbolDoc>,
}

impl GroupDoc {
    pub fn to_expr(&self) -> Result<GroupExpr, String> {
        let group = FgAbGroup::new(self.rank, self.torsion.iter().map(|d| d.0.clone()));
        let symbols = self
            .symbols
            .iter()
            .map(|s| {
                Symbol::with_qualifier(s.name.clone(), s.qualifier.as_deref()).ok_or_else(|| {
                    format!(
                        "symbol {:?}: qualifier must read \"after inverting n\" with n >= 1",
                        s.name
                    )
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupExpr::new(group, symbols))
    }
}

pub fn group_to_json(g: &GroupExpr) -> Value {
    let symbols: Vec<Value> = g
        .symbols()
        .iter()
        .map(|s| match s.qualifier() {
            Some(q) => json!({ "name": s.name(), "qualifier": q }),
            None => json!({ "name": s.name() }),
        })
        .collect();
    json!({
        "rank": g.free_rank(),
        "torsion": g.torsion().iter().map(int_to_json).collect::<Vec<_>>(),
        "symbols": symbols,
    })
}

pub fn fg_group_to_json(g: &FgAbGroup) -> Value {
    group_to_json(&GroupExpr::from(g.clone()))
}

/// Parses a serialized group back into a `GroupExpr`.
pub fn group_from_json(v: &Value) -> Result<GroupExpr, String> {
    let doc: GroupDoc = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
    doc.to_expr()
}
