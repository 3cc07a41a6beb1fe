//! Typed input documents: `{"kind": ..., "payload": {...}}`.
//!
//! Payloads mirror the library types field for field. Unknown fields are
//! rejected and every schema error names the offending path.

use std::collections::BTreeMap;

use relchow::abgroup::{AbMap, GroupExpr, IntMatrix, Presentation};
use relchow::algebra_lab::StructAlgebra;
use relchow::classgroups::is_prime;
use relchow::exactseq::{BoundaryData, MiddleBracket};
use relchow::grouprings::{FiniteGroupTable, GroupRingSpec, RingBase};
use relchow::orders::{
    ClassGroupSource, CurveSpec, FieldKind, HereditaryLocalType, OrderBase, OrderSpec,
};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use crate::error::{Category, CliError};
use crate::json::{matrix_from_rows, GroupDoc, Int};

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Order,
    Groupring,
    Bracket,
    Boundary,
    Algebra,
    ClassgroupQuery,
    Matrix,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Order => "order",
            Kind::Groupring => "groupring",
            Kind::Bracket => "bracket",
            Kind::Boundary => "boundary",
            Kind::Algebra => "algebra",
            Kind::ClassgroupQuery => "classgroup-query",
            Kind::Matrix => "matrix",
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub kind: Kind,
    pub payload: Value,
}

/// Parses document text into JSON, reporting line and column on failure.
pub fn parse_json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::new(Category::Input, "parse", e.to_string()))
}

/// Deserializes `v`, reporting the path of the first offending field.
pub fn from_value<T: DeserializeOwned>(v: &Value, root: &str) -> Result<T, CliError> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = e.path().to_string();
        let location = if path == "." { root.to_string() } else { format!("{root}.{path}") };
        CliError::schema(format!("at {location}: {}", e.inner()))
    })
}

pub fn document(v: &Value) -> Result<InputDocument, CliError> {
    from_value(v, "$")
}

impl InputDocument {
    pub fn payload<T: DeserializeOwned>(&self) -> Result<T, CliError> {
        from_value(&self.payload, "$.payload")
    }

    pub fn expect_kind(&self, allowed: &[Kind], command: &str) -> Result<(), CliError> {
        if allowed.contains(&self.kind) {
            return Ok(());
        }
        let names: Vec<&str> = allowed.iter().map(|k| k.name()).collect();
        Err(CliError::new(
            Category::Input,
            "wrong-kind",
            format!(
                "`{command}` expects a document of kind {}, got {}",
                names.join(" or "),
                self.kind.name()
            ),
        ))
    }
}

fn group_expr(doc: &GroupDoc, location: &str) -> Result<GroupExpr, CliError> {
    doc.to_expr().map_err(|m| CliError::schema(format!("at {location}: {m}")))
}

// ---------------------------------------------------------------- orders

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum FieldKindDoc {
    AlgebraicallyClosed,
    General,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveDoc {
    name: String,
    field_kind: FieldKindDoc,
    proper: bool,
    /// Omitted: the Picard group stays the opaque symbol `Pic(<name>)`.
    #[serde(default)]
    pic: Option<GroupDoc>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct NamedDoc {
    name: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum BaseDoc {
    Curve(CurveDoc),
    Dedekind(NamedDoc),
    Dvr,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LocalTypeDoc {
    blocks: Vec<u32>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum ClassSourceDoc {
    Expr(GroupDoc),
    QuadraticDiscriminant(i64),
    Cyclotomic(u64),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrderDoc {
    base: BaseDoc,
    csa_degree: u32,
    unramified: bool,
    split: bool,
    hereditary: bool,
    maximal: bool,
    #[serde(default)]
    local_types: BTreeMap<String, LocalTypeDoc>,
    #[serde(default)]
    maximal_class_group: Option<ClassSourceDoc>,
}

pub fn order_spec(doc: &InputDocument) -> Result<OrderSpec, CliError> {
    let d: OrderDoc = doc.payload()?;
    let base = match d.base {
        BaseDoc::Curve(c) => {
            let pic = match &c.pic {
                Some(g) => group_expr(g, "$.payload.base.curve.pic")?,
                None => GroupExpr::symbol(format!("Pic({})", c.name)),
            };
            OrderBase::Curve(CurveSpec {
                name: c.name,
                field_kind: match c.field_kind {
                    FieldKindDoc::AlgebraicallyClosed => FieldKind::AlgebraicallyClosed,
                    FieldKindDoc::General => FieldKind::General,
                },
                proper: c.proper,
                pic,
            })
        }
        BaseDoc::Dedekind(n) => OrderBase::Dedekind { name: n.name },
        BaseDoc::Dvr => OrderBase::Dvr,
    };
    let local_types = d
        .local_types
        .into_iter()
        .map(|(point, t)| Ok((point, HereditaryLocalType::new(t.blocks)?)))
        .collect::<Result<_, relchow::Error>>()?;
    let maximal_class_group = match d.maximal_class_group {
        None => None,
        Some(ClassSourceDoc::Expr(g)) => Some(ClassGroupSource::Expr(group_expr(
            &g,
            "$.payload.maximal_class_group.expr",
        )?)),
        Some(ClassSourceDoc::QuadraticDiscriminant(disc)) => Some(ClassGroupSource::QuadraticDiscriminant(disc)),
        Some(ClassSourceDoc::Cyclotomic(p)) => Some(ClassGroupSource::Cyclotomic(p)),
    };
    let spec = OrderSpec {
        base,
        csa_degree: d.csa_degree,
        unramified: d.unramified,
        split: d.split,
        hereditary: d.hereditary,
        maximal: d.maximal,
        local_types,
        maximal_class_group,
    };
    spec.validate()?;
    Ok(spec)
}

// ---------------------------------------------------------------- group rings

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum GroupSourceDoc {
    Named(String),
    Table(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DedekindRingDoc {
    name: String,
    #[serde(default)]
    invertible_primes: Vec<u64>,
    #[serde(default)]
    class_group: Option<GroupDoc>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RingDoc {
    Integers,
    Cyclotomic(u64),
    Dedekind(DedekindRingDoc),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupRingDoc {
    group: GroupSourceDoc,
    base: RingDoc,
}

/// Parses the `--ring` flag: `Z` or `Z[zeta_p]`.
pub fn ring_flag(spec: &str) -> Result<Value, CliError> {
    let s = spec.replace(' ', "");
    if s == "Z" {
        return Ok(Value::from("integers"));
    }
    s.strip_prefix("Z[zeta_")
        .and_then(|r| r.strip_suffix(']'))
        .and_then(|p| p.parse::<u64>().ok())
        .map(|p| serde_json::json!({ "cyclotomic": p }))
        .ok_or_else(|| CliError::usage(format!("--ring expects Z or Z[zeta_p], got {spec:?}")))
}

pub fn group_ring_spec(doc: &InputDocument) -> Result<GroupRingSpec, CliError> {
    let d: GroupRingDoc = doc.payload()?;
    let group = match d.group {
        GroupSourceDoc::Named(name) => FiniteGroupTable::named(&name)?,
        GroupSourceDoc::Table(t) => FiniteGroupTable::from_table(t)?,
    };
    let base = match d.base {
        RingDoc::Integers => RingBase::Integers,
        RingDoc::Cyclotomic(p) => RingBase::Cyclotomic(p),
        RingDoc::Dedekind(r) => RingBase::Dedekind {
            name: r.name,
            invertible_primes: r.invertible_primes,
            class_group: r
                .class_group
                .as_ref()
                .map(|g| group_expr(g, "$.payload.base.dedekind.class_group"))
                .transpose()?,
        },
    };
    Ok(GroupRingSpec::new(group, base)?)
}

// ---------------------------------------------------------------- exact sequences

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    generators: usize,
    /// Rows indexed by generators; each column is one relation.
    #[serde(default)]
    relations: Vec<Vec<Int>>,
}

impl PresentationDoc {
    fn build(&self) -> Result<Presentation, CliError> {
        let relations = if self.relations.is_empty() {
            IntMatrix::zeros(self.generators, 0)
        } else {
            matrix_from_rows(&self.relations, 0)?
        };
        Ok(Presentation::new(self.generators, relations)?)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDoc {
    domain: PresentationDoc,
    codomain: PresentationDoc,
    /// Rows indexed by codomain generators, columns by domain generators.
    matrix: Vec<Vec<Int>>,
}

impl MapDoc {
    fn build(&self) -> Result<AbMap, CliError> {
        let domain = self.domain.build()?;
        let codomain = self.codomain.build()?;
        let matrix = matrix_from_rows(&self.matrix, self.domain.generators)?;
        Ok(AbMap::new(domain, codomain, matrix)?)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketDoc {
    iota: MapDoc,
    pi: MapDoc,
    #[serde(default)]
    idempotent_complete: Option<bool>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundaryDoc {
    k1_boundary: MapDoc,
}

pub fn bracket(doc: &InputDocument) -> Result<MiddleBracket, CliError> {
    let d: BracketDoc = doc.payload()?;
    Ok(MiddleBracket::new(d.iota.build()?, d.pi.build()?, d.idempotent_complete)?)
}

pub fn boundary(doc: &InputDocument) -> Result<BoundaryData, CliError> {
    let d: BoundaryDoc = doc.payload()?;
    Ok(BoundaryData {
        k1_boundary: d.k1_boundary.build()?,
    })
}

// ---------------------------------------------------------------- matrices, class groups

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    entries: Vec<Vec<Int>>,
    /// Needed only when there are no rows.
    #[serde(default)]
    cols: Option<usize>,
}

pub fn matrix(doc: &InputDocument) -> Result<IntMatrix, CliError> {
    let d: MatrixDoc = doc.payload()?;
    let m = matrix_from_rows(&d.entries, d.cols.unwrap_or(0))?;
    if let Some(c) = d.cols {
        if c != m.cols() {
            return Err(CliError::schema(format!(
                "at $.payload.cols: declared {c} columns but rows have {}",
                m.cols()
            )));
        }
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassGroupQuery {
    Discriminant(i64),
    Cyclotomic(u64),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassGroupDoc {
    #[serde(default)]
    discriminant: Option<i64>,
    #[serde(default)]
    cyclotomic: Option<u64>,
}

pub fn class_group_query(doc: &InputDocument) -> Result<ClassGroupQuery, CliError> {
    let d: ClassGroupDoc = doc.payload()?;
    match (d.discriminant, d.cyclotomic) {
        (Some(disc), None) => Ok(ClassGroupQuery::Discriminant(disc)),
        (None, Some(p)) => Ok(ClassGroupQuery::Cyclotomic(p)),
        _ => Err(CliError::schema(
            "at $.payload: exactly one of `discriminant` and `cyclotomic` is required",
        )),
    }
}

// ---------------------------------------------------------------- algebras

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    p: u32,
    #[serde(default)]
    dim: Option<usize>,
    /// `structure_constants[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
    #[serde(default)]
    structure_constants: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default)]
    unit: Option<Vec<u32>>,
    /// Shorthand instead of explicit constants, e.g. `upper_triangular:3`.
    #[serde(default)]
    construction: Option<String>,
    /// What this algebra stands in for, when it is a finite-dimensional proxy.
    #[serde(default)]
    proxy_for: Option<String>,
}

pub struct AlgebraInput {
    pub algebra: StructAlgebra,
    pub proxy_for: Option<String>,
}

pub fn algebra(doc: &InputDocument) -> Result<AlgebraInput, CliError> {
    let d: AlgebraDoc = doc.payload()?;
    let algebra = match (&d.construction, &d.structure_constants) {
        (Some(c), None) => {
            if d.dim.is_some() || d.unit.is_some() {
                return Err(CliError::schema(
                    "at $.payload: `dim` and `unit` are implied by `construction`",
                ));
            }
            construct(d.p, c)?
        }
        (None, Some(consts)) => {
            let dim = d.dim.unwrap_or(consts.len());
            let unit = d
                .unit
                .clone()
                .ok_or_else(|| CliError::schema("at $.payload.unit: required with structure_constants"))?;
            let mut flat = Vec::with_capacity(dim * dim * dim);
            for (i, row) in consts.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if v.len() != dim {
                        return Err(CliError::schema(format!(
                            "at $.payload.structure_constants[{i}][{j}]: expected {dim} entries"
                        )));
                    }
                    flat.extend(v);
                }
            }
            StructAlgebra::new(d.p, dim, flat, unit)?
        }
        _ => {
            return Err(CliError::schema(
                "at $.payload: exactly one of `construction` and `structure_constants` is required",
            ))
        }
    };
    Ok(AlgebraInput {
        algebra,
        proxy_for: d.proxy_for,
    })
}

/// Largest dimension a construction may request; structure constants grow cubically.
const MAX_CONSTRUCTION_DIM: usize = 64;
const MAX_CONSTRUCTION_SIDE: usize = 8;

/// `matrix:k`, `upper_triangular:k`, `field_product:m`, `dual_numbers`,
/// `polynomial:c0,c1,...,1` (monic, constant term first), `group:NAME`.
fn construct(p: u32, spec: &str) -> Result<StructAlgebra, CliError> {
    let bad = |m: &str| CliError::schema(format!("at $.payload.construction: {m}"));
    if !is_prime(u64::from(p)) {
        return Err(relchow::Error::InvalidAlgebra(format!("characteristic {p} is not prime")).into());
    }
    let size = |s: &str, max: usize| match s.parse::<usize>() {
        Ok(k) if (1..=max).contains(&k) => Ok(k),
        _ => Err(bad(&format!("expected a size between 1 and {max}"))),
    };
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    Ok(match name {
        "matrix" => StructAlgebra::matrix_algebra(p, size(arg, MAX_CONSTRUCTION_SIDE)?),
        "upper_triangular" => StructAlgebra::upper_triangular(p, size(arg, MAX_CONSTRUCTION_SIDE)?),
        "field_product" => StructAlgebra::field_product(p, size(arg, MAX_CONSTRUCTION_DIM)?),
        "dual_numbers" => StructAlgebra::dual_numbers(p),
        "polynomial" => {
            let coeffs = arg
                .split(',')
                .map(|c| c.trim().parse::<u32>().map(|x| x % p))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad("polynomial coefficients must be nonnegative integers"))?;
            StructAlgebra::polynomial_quotient(p, &coeffs)?
        }
        "group" => {
            let g = FiniteGroupTable::named(arg)?;
            if g.order() > MAX_CONSTRUCTION_DIM {
                return Err(bad(&format!("group algebras are limited to order {MAX_CONSTRUCTION_DIM}")));
            }
            StructAlgebra::group_algebra(p, &g)
        }
        _ => return Err(bad(&format!("unknown construction {spec:?}"))),
    })
}
