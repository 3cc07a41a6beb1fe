//! Chow groups of integral group rings `RG` over one-dimensional bases.

mod table;

pub use table::{conjugacy_classes, cyclic_subgroup_classes, cyclic_subgroups, FiniteGroupTable};

use crate::abgroup::GroupExpr;
use crate::classgroups::{cyclotomic_class_group, is_prime};
use crate::{Derived, Error, Rule};

/// Orders of the cyclic groups with vanishing `Cl(ZG)`.
pub const VANISHING_CYCLIC_ORDERS: [usize; 15] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 17, 19];

/// Declarative base ring; all are of characteristic zero, so `KG` is separable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingBase {
    Integers,
    /// `Z[zeta_p]`.
    Cyclotomic(u64),
    /// A Dedekind domain described only by the primes invertible in it and,
    /// optionally, its class group.
    Dedekind {
        name: String,
        invertible_primes: Vec<u64>,
        class_group: Option<GroupExpr>,
    },
}

impl RingBase {
    pub fn label(&self) -> String {
        match self {
            RingBase::Integers => "Z".into(),
            RingBase::Cyclotomic(p) => format!("Z[zeta_{p}]"),
            RingBase::Dedekind { name, .. } => name.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingSpec {
    pub group: FiniteGroupTable,
    pub base: RingBase,
}

impl GroupRingSpec {
    pub fn new(group: FiniteGroupTable, base: RingBase) -> Result<Self, Error> {
        if let RingBase::Cyclotomic(p) = base {
            if !is_prime(p) {
                return Err(Error::InvalidPrime(p));
            }
        }
        Ok(GroupRingSpec { group, base })
    }

    fn is_cyclic_of_order(&self, n: usize) -> bool {
        self.group.order() == n && self.group.is_cyclic()
    }
}

/// `CH_1(R, RG) ≅ ℤ^t`, `t` the number of Artin–Wedderburn factors of `KG`.
pub fn ch1_group_ring(s: &GroupRingSpec) -> Derived<GroupExpr> {
    let n = s.group.order();
    match &s.base {
        RingBase::Integers => {
            let t = cyclic_subgroup_classes(&s.group);
            Derived::new(
                GroupExpr::free(t),
                vec![Rule::GroupRingTopChow, Rule::CyclicSubgroupCount],
            )
        }
        RingBase::Cyclotomic(p) if n == 1 || s.is_cyclic_of_order(*p as usize) => Derived::new(
            GroupExpr::free(n),
            vec![Rule::GroupRingTopChow, Rule::CyclotomicBaseSplitting],
        ),
        base => Derived::new(
            GroupExpr::symbol(format!("Z^t(t = Wedderburn factors of K{})", base_group_label(base))),
            vec![Rule::GroupRingTopChow],
        )
        .warn(format!(
            "the Artin-Wedderburn factor count over the fraction field of {} is only available over Z or for Cyc_p over Z[zeta_p]",
            base.label()
        )),
    }
}

fn base_group_label(base: &RingBase) -> String {
    match base {
        RingBase::Integers => "ZG".into(),
        other => format!("({})G", other.label()),
    }
}

/// Whether the group lies in the vanishing classification for `Cl(ZG)`.
pub fn in_vanishing_classification(g: &FiniteGroupTable) -> bool {
    let n = g.order();
    if g.is_cyclic() {
        VANISHING_CYCLIC_ORDERS.contains(&n)
    } else {
        n == 4 && g.is_abelian()
    }
}

/// `CH_0(R, RG) ≅ K̃_0(RG) ≅ Cl(RG)`, resolved where classical data is known.
pub fn ch0_group_ring(s: &GroupRingSpec) -> Result<Derived<GroupExpr>, Error> {
    let n = s.group.order();
    let symbolic = |s: &GroupRingSpec| {
        let name = format!("Cl({})", base_group_label(&s.base));
        Derived::new(GroupExpr::symbol(name.clone()), vec![Rule::GroupRingDegreeZero]).warn(format!(
            "{name} unresolved; it is an extension 0 -> D -> {name} -> Cl(Lambda') -> 0 of the class group of any maximal order Lambda' containing the group ring, independent of the choice of Lambda'"
        ))
    };
    match &s.base {
        RingBase::Integers => {
            if in_vanishing_classification(&s.group) {
                return Ok(Derived::new(
                    GroupExpr::trivial(),
                    vec![Rule::GroupRingDegreeZero, Rule::VanishingClassification],
                ));
            }
            if s.group.is_cyclic() && is_prime(n as u64) {
                let cl = cyclotomic_class_group(n as u64)?;
                return Ok(Derived::new(
                    cl,
                    vec![Rule::GroupRingDegreeZero, Rule::CyclicPrimeClassGroup, Rule::CyclotomicTable],
                ));
            }
            Ok(symbolic(s))
        }
        RingBase::Cyclotomic(p) if n == 1 => Ok(Derived::new(
            cyclotomic_class_group(*p)?,
            vec![Rule::GroupRingDegreeZero, Rule::CyclotomicTable],
        )),
        RingBase::Dedekind {
            class_group: Some(cl),
            ..
        } if n == 1 => Ok(Derived::new(cl.clone(), vec![Rule::GroupRingDegreeZero])),
        _ => Ok(symbolic(s)),
    }
}

/// `RG` is maximal iff `|G|` is a unit in `R`.
pub fn is_maximal_group_ring(s: &GroupRingSpec) -> bool {
    let mut n = s.group.order() as u64;
    match &s.base {
        RingBase::Integers | RingBase::Cyclotomic(_) => n == 1,
        RingBase::Dedekind {
            invertible_primes, ..
        } => {
            for &p in invertible_primes.iter().filter(|&&p| p >= 2) {
                while n.is_multiple_of(p) {
                    n /= p;
                }
            }
            n == 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::FgAbGroup;

    fn over_z(g: FiniteGroupTable) -> GroupRingSpec {
        GroupRingSpec::new(g, RingBase::Integers).unwrap()
    }

    #[test]
    fn top_chow() {
        assert_eq!(ch1_group_ring(&over_z(FiniteGroupTable::cyclic(5))).value, GroupExpr::free(2));
        assert_eq!(ch1_group_ring(&over_z(FiniteGroupTable::cyclic(6))).value, GroupExpr::free(4));
        let s = GroupRingSpec::new(FiniteGroupTable::cyclic(5), RingBase::Cyclotomic(5)).unwrap();
        assert_eq!(ch1_group_ring(&s).value, GroupExpr::free(5));
        let s = GroupRingSpec::new(FiniteGroupTable::cyclic(4), RingBase::Cyclotomic(5)).unwrap();
        let d = ch1_group_ring(&s);
        assert!(!d.value.is_resolved());
        assert!(!d.warnings.is_empty());
    }

    #[test]
    fn degree_zero() {
        let d = ch0_group_ring(&over_z(FiniteGroupTable::cyclic(23))).unwrap();
        assert_eq!(d.value, FgAbGroup::cyclic(3).into());
        assert!(ch0_group_ring(&over_z(FiniteGroupTable::klein4())).unwrap().value.is_trivial());
        assert!(ch0_group_ring(&over_z(FiniteGroupTable::cyclic(7))).unwrap().value.is_trivial());
        let s3 = ch0_group_ring(&over_z(FiniteGroupTable::symmetric(3))).unwrap();
        assert_eq!(s3.value.symbols()[0].name(), "Cl(ZG)");
        assert!(s3.warnings[0].contains("independent of the choice"));
        let c29 = ch0_group_ring(&over_z(FiniteGroupTable::cyclic(29))).unwrap();
        assert_eq!(c29.value.symbols()[0].name(), "Cl(Z[zeta_29])");
    }

    #[test]
    fn maximality() {
        assert!(is_maximal_group_ring(&over_z(FiniteGroupTable::cyclic(1))));
        assert!(!is_maximal_group_ring(&over_z(FiniteGroupTable::cyclic(5))));
        let base = RingBase::Dedekind {
            name: "Z[1/5]".into(),
            invertible_primes: vec![5],
            class_group: None,
        };
        let s = GroupRingSpec::new(FiniteGroupTable::cyclic(5), base.clone()).unwrap();
        assert!(is_maximal_group_ring(&s));
        let s = GroupRingSpec::new(FiniteGroupTable::cyclic(10), base).unwrap();
        assert!(!is_maximal_group_ring(&s));
    }

    #[test]
    fn cyclotomic_base_must_be_prime() {
        assert!(GroupRingSpec::new(FiniteGroupTable::cyclic(3), RingBase::Cyclotomic(9)).is_err());
    }
}
