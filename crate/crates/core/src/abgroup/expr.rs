use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::write_torsion;
use super::FgAbGroup;

/// A named summand that cannot be resolved to a finitely generated group,
/// e.g. `Pic(C)` or the free group on closed points `Z^(X_0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    name: String,
    /// Set once the summand has been tensored with `ℤ[1/n]`; holds `n`.
    inverted: Option<BigUint>,
}

impl Symbol {
    pub fn new(name: impl Into<String>) -> Self {
        Symbol {
            name: name.into(),
            inverted: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn inverted(&self) -> Option<&BigUint> {
        self.inverted.as_ref()
    }

    /// `"after inverting n"` when the summand carries a localization.
    pub fn qualifier(&self) -> Option<String> {
        self.inverted.as_ref().map(|n| format!("after inverting {n}"))
    }

    /// Parses a qualifier string of the form produced by [`Symbol::qualifier`].
    pub fn with_qualifier(name: impl Into<String>, qualifier: Option<&str>) -> Option<Self> {
        let inverted = match qualifier {
            None => None,
            Some(q) => Some(q.strip_prefix("after inverting ")?.trim().parse::<BigUint>().ok()?),
        };
        Some(Symbol {
            name: name.into(),
            inverted,
        })
    }

    fn invert(&mut self, n: &BigUint) {
        if n.is_one() {
            return;
        }
        self.inverted = Some(match self.inverted.take() {
            Some(m) => m.lcm(n),
            None => n.clone(),
        });
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.qualifier() {
            Some(q) => write!(f, "{} [{q}]", self.name),
            None => write!(f, "{}", self.name),
        }
    }
}

/// Formal direct sum of a finitely generated part and opaque symbols.
///
/// Normalized on construction: the free rank aggregates all `ℤ` summands, the
/// torsion is in invariant-factor form, and symbols are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroupExpr {
    group: FgAbGroup,
    symbols: Vec<Symbol>,
}

impl GroupExpr {
    pub fn new(group: FgAbGroup, symbols: impl IntoIterator<Item = Symbol>) -> Self {
        let mut symbols: Vec<Symbol> = symbols.into_iter().collect();
        symbols.sort();
        GroupExpr { group, symbols }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup::free(rank).into()
    }

    pub fn symbol(name: impl Into<String>) -> Self {
        GroupExpr::new(FgAbGroup::trivial(), [Symbol::new(name)])
    }

    pub fn free_rank(&self) -> usize {
        self.group.rank()
    }

    pub fn torsion(&self) -> &[BigInt] {
        self.group.torsion()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// The finitely generated part, ignoring symbols.
    pub fn group_part(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn is_resolved(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The value as a finitely generated group, when no symbol remains.
    pub fn as_group(&self) -> Option<&FgAbGroup> {
        self.is_resolved().then_some(&self.group)
    }

    pub fn is_trivial(&self) -> bool {
        self.is_resolved() && self.group.is_trivial()
    }

    /// Same expression with all localization qualifiers dropped.
    pub fn without_qualifiers(&self) -> GroupExpr {
        GroupExpr::new(
            self.group.clone(),
            self.symbols.iter().map(|s| Symbol::new(s.name.clone())),
        )
    }
}

impl From<FgAbGroup> for GroupExpr {
    fn from(group: FgAbGroup) -> Self {
        GroupExpr {
            group,
            symbols: Vec::new(),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return write!(f, "{}", self.group);
        }
        let syms: Vec<String> = self.symbols.iter().map(ToString::to_string).collect();
        write!(f, "{}", syms.join(" + "))?;
        if !self.group.is_trivial() {
            write!(f, " + ")?;
            write_torsion(f, self.group.rank(), self.group.torsion())?;
        }
        Ok(())
    }
}

/// Normalized formal direct sum.
pub fn direct_sum(a: &GroupExpr, b: &GroupExpr) -> GroupExpr {
    GroupExpr::new(
        a.group.direct_sum(&b.group),
        a.symbols.iter().chain(&b.symbols).cloned(),
    )
}

/// Tensor with `ℤ[1/n]`: strips from each torsion factor every prime dividing
/// `n`. Free rank is unchanged. Symbols are not simplified, only annotated
/// with the localization.
///
/// # Panics
/// If `n` is zero.
pub fn invert_integer(g: &GroupExpr, n: &BigUint) -> GroupExpr {
    assert!(!n.is_zero(), "cannot invert 0");
    let n = BigInt::from(n.clone());
    let torsion = g.group.torsion().iter().map(|d| {
        let mut d = d.clone();
        loop {
            let common = d.gcd(&n);
            if common.is_one() {
                break d;
            }
            d /= common;
        }
    });
    let group = FgAbGroup::new(g.group.rank(), torsion);
    let n = n.magnitude();
    let symbols = g.symbols.iter().cloned().map(|mut s| {
        s.invert(n);
        s
    });
    GroupExpr::new(group, symbols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fg(rank: usize, t: &[u64]) -> GroupExpr {
        FgAbGroup::from_u64s(rank, t).into()
    }

    #[test]
    fn sums() {
        assert_eq!(direct_sum(&fg(1, &[]), &fg(0, &[2])), fg(1, &[2]));
        assert_eq!(direct_sum(&fg(0, &[2]), &fg(0, &[3])), fg(0, &[6]));
        let s = direct_sum(&GroupExpr::symbol("Pic(C)"), &fg(1, &[]));
        assert_eq!(s.free_rank(), 1);
        assert_eq!(s.symbols(), &[Symbol::new("Pic(C)")]);
    }

    #[test]
    fn symbols_sorted() {
        let s = direct_sum(&GroupExpr::symbol("Z^(X_0)"), &GroupExpr::symbol("Cl(Abar)"));
        let names: Vec<&str> = s.symbols().iter().map(Symbol::name).collect();
        assert_eq!(names, ["Cl(Abar)", "Z^(X_0)"]);
    }

    #[test]
    fn inverting() {
        let two = BigUint::from(2u8);
        assert_eq!(invert_integer(&fg(1, &[8]), &two), fg(1, &[]));
        assert_eq!(invert_integer(&fg(0, &[6]), &two), fg(0, &[3]));
        let g = direct_sum(&fg(2, &[4, 12]), &GroupExpr::symbol("Pic(C)"));
        assert_eq!(invert_integer(&g, &BigUint::from(1u8)), g);
    }

    #[test]
    fn inverting_annotates_symbols() {
        let g = invert_integer(&GroupExpr::symbol("Pic(C)"), &BigUint::from(3u8));
        assert_eq!(g.symbols()[0].qualifier().as_deref(), Some("after inverting 3"));
        assert_eq!(g.to_string(), "Pic(C) [after inverting 3]");
        let back = Symbol::with_qualifier("Pic(C)", Some("after inverting 3")).unwrap();
        assert_eq!(back, g.symbols()[0]);
        assert!(Symbol::with_qualifier("x", Some("bogus")).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(fg(0, &[]).to_string(), "0");
        assert_eq!(fg(2, &[2, 4]).to_string(), "Z^2 + Z/2 + Z/4");
        let g = direct_sum(&GroupExpr::symbol("Z^(X_0)"), &fg(1, &[]));
        assert_eq!(g.to_string(), "Z^(X_0) + Z");
    }
}
