//! Class-group backends: imaginary quadratic fields from reduced binary
//! quadratic forms, a fixed table for `Z[zeta_p]`, and Morita transport to
//! matrix orders.

mod forms;

pub use forms::{form_class_group, reduced_forms, validate_discriminant, FormClassTable, QuadForm};

use num_bigint::BigInt;

use crate::abgroup::{FgAbGroup, GroupExpr};
use crate::Error;

const CYCLOTOMIC_TABLE: &str = include_str!("cyclotomic_table.txt");

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// The embedded table as `(p, class group)` pairs, in file order.
pub fn cyclotomic_table() -> Vec<(u64, FgAbGroup)> {
    CYCLOTOMIC_TABLE
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut fields = line.split_whitespace().map(|t| t.parse::<u64>().expect("table entries are integers"));
            let p = fields.next().expect("nonempty line");
            (p, FgAbGroup::new(0, fields.map(BigInt::from)))
        })
        .collect()
}

/// Name of the unresolved summand for `Cl(Z[zeta_p])`.
pub fn cyclotomic_symbol(p: u64) -> String {
    format!("Cl(Z[zeta_{p}])")
}

/// `Cl(Z[zeta_p])` from the table; primes outside it yield an unresolved symbol.
pub fn cyclotomic_class_group(p: u64) -> Result<GroupExpr, Error> {
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    Ok(cyclotomic_table()
        .into_iter()
        .find(|(q, _)| *q == p)
        .map_or_else(|| GroupExpr::symbol(cyclotomic_symbol(p)), |(_, g)| g.into()))
}

/// Class group of a full matrix order `M_n(R)`: Morita invariance returns the
/// class group of `R` unchanged.
pub fn class_group_of_matrix_order(base: &GroupExpr, n: u32) -> GroupExpr {
    debug_assert!(n >= 1, "matrix size must be positive");
    base.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_lookups() {
        assert_eq!(cyclotomic_class_group(23).unwrap(), FgAbGroup::cyclic(3).into());
        assert!(cyclotomic_class_group(11).unwrap().is_trivial());
        let g = cyclotomic_class_group(29).unwrap();
        assert!(!g.is_resolved());
        assert_eq!(g.symbols()[0].name(), "Cl(Z[zeta_29])");
        assert_eq!(cyclotomic_class_group(9), Err(Error::InvalidPrime(9)));
    }

    #[test]
    fn table_covers_all_odd_primes_to_23() {
        let primes: Vec<u64> = cyclotomic_table().iter().map(|(p, _)| *p).collect();
        assert_eq!(primes, [3, 5, 7, 11, 13, 17, 19, 23]);
    }

    #[test]
    fn morita_passthrough() {
        let z3: GroupExpr = FgAbGroup::cyclic(3).into();
        assert_eq!(class_group_of_matrix_order(&z3, 2), z3);
        let pic = GroupExpr::symbol("Pic(C)");
        assert_eq!(class_group_of_matrix_order(&pic, 7), pic);
        assert!(class_group_of_matrix_order(&GroupExpr::trivial(), 5).is_trivial());
    }
}
