//! Structure theorems for orders on curves and over Dedekind domains and
//! discrete valuation rings: local types, chain length, and the cycle, Chow
//! and `K_0` groups they determine.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::abgroup::{direct_sum, invert_integer, FgAbGroup, GroupExpr};
use crate::classgroups::{class_group_of_matrix_order, cyclotomic_class_group, form_class_group};
use crate::{Derived, Error, Rule};

pub const CLOSED_POINTS_SYMBOL: &str = "Z^(X_0)";
pub const MAXIMAL_CLASS_GROUP_SYMBOL: &str = "Cl(Abar)";
pub const MAXIMAL_K0_SYMBOL: &str = "K0(Abar)";

/// Block decomposition `(n₁, …, n_r)` of a hereditary order over a complete
/// DVR. The type is the number of blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HereditaryLocalType {
    blocks: Vec<u32>,
}

impl HereditaryLocalType {
    pub fn new(blocks: Vec<u32>) -> Result<Self, Error> {
        if blocks.is_empty() {
            return Err(Error::InvalidOrder("empty block list".into()));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidOrder("block sizes must be positive".into()));
        }
        Ok(HereditaryLocalType { blocks })
    }

    /// The single-block type of a maximal order of degree `n`.
    pub fn maximal(n: u32) -> Self {
        HereditaryLocalType { blocks: vec![n] }
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    /// Sum of the block sizes, the degree of the ambient algebra.
    pub fn degree(&self) -> u64 {
        self.blocks.iter().map(|&b| u64::from(b)).sum()
    }
}

pub fn local_type(t: &HereditaryLocalType) -> usize {
    t.blocks.len()
}

/// `Z_0` of a hereditary order over a complete DVR: `ℤ^r` for type `r`.
pub fn dvr_cycle_group(t: &HereditaryLocalType) -> FgAbGroup {
    FgAbGroup::free(local_type(t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    AlgebraicallyClosed,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub name: String,
    pub field_kind: FieldKind,
    pub proper: bool,
    pub pic: GroupExpr,
}

impl CurveSpec {
    /// `P¹` with `Pic = ℤ`.
    pub fn projective_line(field_kind: FieldKind) -> Self {
        CurveSpec {
            name: "P1".into(),
            field_kind,
            proper: true,
            pic: GroupExpr::free(1),
        }
    }

    /// A curve whose Picard group is left symbolic.
    pub fn unspecified(name: impl Into<String>, field_kind: FieldKind, proper: bool) -> Self {
        CurveSpec {
            name: name.into(),
            field_kind,
            proper,
            pic: GroupExpr::symbol("Pic(C)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderBase {
    Curve(CurveSpec),
    /// Affine spectrum of a Dedekind domain.
    Dedekind { name: String },
    /// A (complete) discrete valuation ring: one closed point.
    Dvr,
}

/// Where the class group of a containing maximal order comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassGroupSource {
    Expr(GroupExpr),
    /// Class group of the centre, the imaginary quadratic field of this discriminant.
    QuadraticDiscriminant(i64),
    /// Class group of the centre `Z[zeta_p]`.
    Cyclotomic(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpec {
    pub base: OrderBase,
    pub csa_degree: u32,
    pub unramified: bool,
    /// The generic fibre is a full matrix algebra.
    pub split: bool,
    pub hereditary: bool,
    pub maximal: bool,
    /// Points not listed have type 1.
    pub local_types: BTreeMap<String, HereditaryLocalType>,
    pub maximal_class_group: Option<ClassGroupSource>,
}

impl OrderSpec {
    /// A split maximal order of degree `n` on `base`.
    pub fn split_maximal(base: OrderBase, n: u32) -> Self {
        OrderSpec {
            base,
            csa_degree: n,
            unramified: true,
            split: true,
            hereditary: true,
            maximal: true,
            local_types: BTreeMap::new(),
            maximal_class_group: None,
        }
    }

    pub fn with_local_type(mut self, point: impl Into<String>, blocks: Vec<u32>) -> Result<Self, Error> {
        self.local_types.insert(point.into(), HereditaryLocalType::new(blocks)?);
        if self.local_types.values().any(|t| t.blocks.len() > 1) {
            self.maximal = false;
        }
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let fail = |m: String| Err(Error::InvalidOrder(m));
        if self.csa_degree == 0 {
            return fail("csa_degree must be at least 1".into());
        }
        if self.maximal && !self.hereditary {
            return fail("a maximal order is hereditary".into());
        }
        if self.split && !self.unramified {
            return fail("a split generic fibre is unramified".into());
        }
        for (point, t) in &self.local_types {
            if t.degree() != u64::from(self.csa_degree) {
                return fail(format!(
                    "blocks at {point} sum to {} but csa_degree is {}",
                    t.degree(),
                    self.csa_degree
                ));
            }
            if self.maximal && t.blocks.len() != 1 {
                return fail(format!("maximal order has type {} at {point}", t.blocks.len()));
            }
        }
        if matches!(self.base, OrderBase::Dvr) && self.local_types.len() > 1 {
            return fail("a DVR has a single closed point".into());
        }
        Ok(())
    }

    fn base_is_split(&self) -> bool {
        self.split
            || matches!(&self.base, OrderBase::Curve(c) if c.field_kind == FieldKind::AlgebraicallyClosed)
    }
}

/// `ρ = Σ_p (r_p − 1)`, the length of a maximal chain of orders above `o`.
pub fn chain_length_rho(o: &OrderSpec) -> Result<usize, Error> {
    o.validate()?;
    if !o.hereditary {
        return Err(Error::NonHereditaryChain);
    }
    if o.maximal {
        return Ok(0);
    }
    Ok(o.local_types.values().map(|t| local_type(t) - 1).sum())
}

/// Cycle group `Z_dim`.
pub fn cycle_group(o: &OrderSpec, dim: u32) -> Result<Derived<GroupExpr>, Error> {
    o.validate()?;
    match dim {
        1 => Ok(Derived::new(GroupExpr::free(1), vec![Rule::TopCycleGroup])),
        0 => {
            let rho = chain_length_rho(o)?;
            let trace = vec![Rule::CycleGroupSimples, Rule::ChainLength];
            let value = match o.base {
                OrderBase::Dvr => {
                    let t = o
                        .local_types
                        .values()
                        .next()
                        .cloned()
                        .unwrap_or_else(|| HereditaryLocalType::maximal(o.csa_degree));
                    return Ok(Derived::new(dvr_cycle_group(&t).into(), vec![Rule::DvrType]));
                }
                _ => direct_sum(&GroupExpr::symbol(CLOSED_POINTS_SYMBOL), &GroupExpr::free(rho)),
            };
            Ok(Derived::new(value, trace))
        }
        _ => Ok(Derived::new(GroupExpr::trivial(), vec![Rule::VanishingAboveDimension])),
    }
}

/// Class group of a maximal order containing `o`, resolved where a backend
/// supplies it.
fn maximal_class_group(o: &OrderSpec) -> Result<Derived<GroupExpr>, Error> {
    let unresolved = |why: &str| {
        Derived::new(GroupExpr::symbol(MAXIMAL_CLASS_GROUP_SYMBOL), vec![]).warn(format!(
            "class group of the maximal order left symbolic: {why}"
        ))
    };
    let (centre, rule) = match &o.maximal_class_group {
        Some(ClassGroupSource::Expr(g)) => return Ok(Derived::new(g.clone(), vec![])),
        Some(ClassGroupSource::QuadraticDiscriminant(d)) => (form_class_group(*d)?.into(), Rule::QuadraticForms),
        Some(ClassGroupSource::Cyclotomic(p)) => (cyclotomic_class_group(*p)?, Rule::CyclotomicTable),
        None if matches!(o.base, OrderBase::Dvr) => {
            // Maximal orders over a complete DVR have trivial class group.
            return Ok(Derived::new(GroupExpr::trivial(), vec![]));
        }
        None => return Ok(unresolved("no class group supplied")),
    };
    if o.csa_degree == 1 {
        return Ok(Derived::new(centre, vec![rule]));
    }
    if !o.split {
        return Ok(unresolved("the backend describes the centre and the generic fibre is not split"));
    }
    Ok(Derived::new(
        class_group_of_matrix_order(&centre, o.csa_degree),
        vec![rule, Rule::MoritaClassGroup],
    ))
}

/// Chow group `CH_dim`.
pub fn chow_group(o: &OrderSpec, dim: u32) -> Result<Derived<GroupExpr>, Error> {
    o.validate()?;
    match dim {
        0 => {}
        1 => return Ok(Derived::new(GroupExpr::free(1), vec![Rule::TopCycleGroup])),
        _ => return Ok(Derived::new(GroupExpr::trivial(), vec![Rule::VanishingAboveDimension])),
    }
    if !o.hereditary {
        return Err(Error::NoStructureTheorem);
    }
    let rho = GroupExpr::free(chain_length_rho(o)?);
    let mut out = match &o.base {
        OrderBase::Curve(curve) if o.base_is_split() => {
            let d = Derived::new(
                direct_sum(&curve.pic, &rho),
                vec![Rule::ChainLength, Rule::HereditaryCurveChow, Rule::SplitCurveChow],
            );
            if !o.split {
                d.warn("algebraically closed base field: the generic fibre is split, split=false ignored")
            } else {
                d
            }
        }
        OrderBase::Curve(curve) if o.unramified => {
            let n = BigUint::from(o.csa_degree);
            Derived::new(
                invert_integer(&direct_sum(&curve.pic, &rho), &n),
                vec![Rule::ChainLength, Rule::HereditaryCurveChow, Rule::AzumayaCurveChow],
            )
            .warn(format!(
                "unramified non-split generic fibre: isomorphism holds only after inverting {n}"
            ))
        }
        OrderBase::Curve(_) => {
            let cl = maximal_class_group(o)?;
            let mut trace = cl.trace;
            trace.extend([Rule::ChainLength, Rule::HereditaryCurveChow]);
            Derived {
                value: direct_sum(&cl.value, &rho),
                trace,
                warnings: cl.warnings,
            }
        }
        OrderBase::Dedekind { .. } | OrderBase::Dvr => {
            let cl = maximal_class_group(o)?;
            let mut trace = cl.trace;
            trace.extend([Rule::ChainLength, Rule::DedekindHereditaryChow]);
            Derived {
                value: direct_sum(&cl.value, &rho),
                trace,
                warnings: cl.warnings,
            }
        }
    };
    out.trace.dedup();
    Ok(out)
}

/// `K_0(A) ≅ K_0(maximal order) ⊕ ℤ^ρ`.
pub fn k0_decomposition(o: &OrderSpec) -> Result<Derived<GroupExpr>, Error> {
    o.validate()?;
    if !o.hereditary {
        return Err(Error::NoStructureTheorem);
    }
    let rho = GroupExpr::free(chain_length_rho(o)?);
    let symbolic = || {
        Derived::new(
            direct_sum(&GroupExpr::symbol(MAXIMAL_K0_SYMBOL), &rho),
            vec![Rule::ChainLength, Rule::HereditaryK0],
        )
    };
    let out = match &o.base {
        OrderBase::Curve(curve) if o.base_is_split() => Derived::new(
            direct_sum(&direct_sum(&curve.pic, &GroupExpr::free(1)), &rho),
            vec![Rule::SplitMaximalK0, Rule::ChainLength, Rule::HereditaryK0],
        ),
        OrderBase::Curve(_) if o.unramified => {
            symbolic().warn("unramified non-split: K0 of the maximal order is known only after inverting the degree")
        }
        _ => {
            let cl = maximal_class_group(o)?;
            if cl.value.is_resolved() {
                // K_0 of the maximal order splits as its reduced part plus ℤ.
                let mut trace = cl.trace;
                trace.extend([Rule::SplitFreeQuotient, Rule::ChainLength, Rule::HereditaryK0]);
                Derived {
                    value: direct_sum(&direct_sum(&cl.value, &GroupExpr::free(1)), &rho),
                    trace,
                    warnings: cl.warnings,
                }
            } else {
                let mut d = symbolic();
                d.warnings = cl.warnings;
                d
            }
        }
    };
    Ok(out)
}
