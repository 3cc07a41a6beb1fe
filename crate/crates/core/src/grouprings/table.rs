use std::collections::{BTreeSet, HashSet};

use crate::Error;

/// Finite group given by its multiplication table on indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroupTable {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(mult: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = mult.len();
        let fail = |m: String| Err(Error::InvalidGroupTable(m));
        if n == 0 {
            return fail("empty table".into());
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != n {
                return fail(format!("row {i} has {} entries, expected {n}", row.len()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return fail(format!("row {i} contains out-of-range element {x}"));
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| mult[e][x] == x && mult[x][e] == x)) else {
            return fail("no identity element".into());
        };
        let mut inverse = Vec::with_capacity(n);
        #[allow(clippy::needless_range_loop)]
        for x in 0..n {
            match (0..n).find(|&y| mult[x][y] == identity && mult[y][x] == identity) {
                Some(y) => inverse.push(y),
                None => return fail(format!("element {x} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mult[a][b];
                for c in 0..n {
                    if mult[ab][c] != mult[a][mult[b][c]] {
                        return fail(format!("associativity fails on ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(FiniteGroupTable {
            mult,
            identity,
            inverse,
        })
    }

    /// Builds from a multiplication rule known to define a group.
    fn from_rule(n: usize, rule: impl Fn(usize, usize) -> usize) -> Self {
        let mult: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| rule(a, b)).collect()).collect();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mult[e][x] == x))
            .expect("rule has an identity");
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| mult[x][y] == identity).expect("rule has inverses"))
            .collect();
        FiniteGroupTable {
            mult,
            identity,
            inverse,
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        Self::from_rule(n, |a, b| (a + b) % n)
    }

    pub fn klein4() -> Self {
        Self::from_rule(4, |a, b| a ^ b)
    }

    /// Dihedral group of order `2m`: `r^i s^j` stored as `i + m·j`.
    pub fn dihedral(m: usize) -> Self {
        assert!(m >= 1, "dihedral group needs m >= 1");
        Self::from_rule(2 * m, |a, b| {
            let (i1, j1) = (a % m, a / m);
            let (i2, j2) = (b % m, b / m);
            let i = if j1 == 0 { (i1 + i2) % m } else { (i1 + m - i2) % m };
            i + m * ((j1 + j2) % 2)
        })
    }

    /// Symmetric group on `k` letters, elements in lexicographic order of
    /// permutations, composition `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        permutations(&mut (0..k).collect(), 0, &mut perms);
        perms.sort();
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&x| s[x]).collect()))
                    .collect()
            })
            .collect();
        Self::from_rule(perms.len(), |a, b| table[a][b])
    }

    /// Parses `cyclic:n`, `klein4`, `sym:k` or `dihedral:m`.
    pub fn named(name: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidGroupTable(format!("unknown group name {name:?}"));
        let arg = |s: &str| s.parse::<usize>().map_err(|_| bad());
        match name.split_once(':') {
            None if name == "klein4" => Ok(Self::klein4()),
            Some(("cyclic", n)) => match arg(n)? {
                0 => Err(bad()),
                n if n > 5000 => Err(Error::InvalidGroupTable(format!("cyclic group of order {n} is too large"))),
                n => Ok(Self::cyclic(n)),
            },
            Some(("sym", k)) => match arg(k)? {
                k @ 1..=6 => Ok(Self::symmetric(k)),
                _ => Err(Error::InvalidGroupTable("sym:k supports 1 <= k <= 6".into())),
            },
            Some(("dihedral", m)) => match arg(m)? {
                m @ 1..=2500 => Ok(Self::dihedral(m)),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        (0..n).any(|x| self.element_order(x) == n)
    }

    /// The same group with element `i` renamed to `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length must equal the group order");
        let mut mult = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                mult[perm[a]][perm[b]] = perm[self.mul(a, b)];
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[perm[a]] = perm[self.inverse[a]];
        }
        FiniteGroupTable {
            mult,
            identity: perm[self.identity],
            inverse,
        }
    }

    fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// The subgroup generated by `x`, as a sorted element list.
    pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
        let mut out = vec![self.identity];
        let mut y = x;
        while y != self.identity {
            out.push(y);
            y = self.mul(y, x);
        }
        out.sort_unstable();
        out
    }
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Orbits of the conjugation action, each sorted, ordered by least element.
pub fn conjugacy_classes(g: &FiniteGroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|h| g.conjugate(h, x)).collect();
        for &y in &class {
            seen[y] = true;
        }
        classes.push(class.into_iter().collect());
    }
    classes
}

/// All distinct cyclic subgroups, as sorted element lists.
pub fn cyclic_subgroups(g: &FiniteGroupTable) -> Vec<Vec<usize>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in 0..g.order() {
        let h = g.cyclic_subgroup(x);
        if seen.insert(h.clone()) {
            out.push(h);
        }
    }
    out.sort();
    out
}

/// Number of conjugacy classes of cyclic subgroups.
pub fn cyclic_subgroup_classes(g: &FiniteGroupTable) -> usize {
    let subgroups = cyclic_subgroups(g);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut classes = 0;
    for h in &subgroups {
        if seen.contains(h) {
            continue;
        }
        classes += 1;
        for x in 0..g.order() {
            let mut conj: Vec<usize> = h.iter().map(|&y| g.conjugate(x, y)).collect();
            conj.sort_unstable();
            seen.insert(conj);
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(classes: &[Vec<usize>]) -> Vec<usize> {
        classes.iter().map(Vec::len).collect()
    }

    #[test]
    fn builtins_validate() {
        for g in [
            FiniteGroupTable::cyclic(1),
            FiniteGroupTable::cyclic(6),
            FiniteGroupTable::klein4(),
            FiniteGroupTable::symmetric(3),
            FiniteGroupTable::symmetric(4),
            FiniteGroupTable::dihedral(4),
            FiniteGroupTable::dihedral(5),
        ] {
            let checked = FiniteGroupTable::from_table(g.table().to_vec()).unwrap();
            assert_eq!(checked, g);
        }
    }

    #[test]
    fn invalid_tables() {
        assert!(FiniteGroupTable::from_table(vec![]).is_err());
        assert!(FiniteGroupTable::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroupTable::from_table(vec![vec![0, 2], vec![1, 0]]).is_err());
        // Identity and inverses but not associative: a Latin square loop of order 5.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroupTable::from_table(loop5), Err(Error::InvalidGroupTable(_))));
    }

    #[test]
    fn conjugacy() {
        assert_eq!(sizes(&conjugacy_classes(&FiniteGroupTable::cyclic(4))), vec![1, 1, 1, 1]);
        let mut s3 = sizes(&conjugacy_classes(&FiniteGroupTable::symmetric(3)));
        s3.sort_unstable();
        assert_eq!(s3, vec![1, 2, 3]);
        assert_eq!(conjugacy_classes(&FiniteGroupTable::cyclic(1)).len(), 1);
    }

    #[test]
    fn cyclic_subgroup_counts() {
        assert_eq!(cyclic_subgroup_classes(&FiniteGroupTable::cyclic(7)), 2);
        assert_eq!(cyclic_subgroup_classes(&FiniteGroupTable::klein4()), 4);
        assert_eq!(cyclic_subgroup_classes(&FiniteGroupTable::symmetric(3)), 3);
        assert_eq!(cyclic_subgroup_classes(&FiniteGroupTable::cyclic(6)), 4);
        // D_4: {1}, <r^2>, <r>, <s>-class, <rs>-class.
        assert_eq!(cyclic_subgroup_classes(&FiniteGroupTable::dihedral(4)), 5);
        // S_4: cycle types 1, 2, 2+2, 3, 4.
        assert_eq!(cyclic_subgroup_classes(&FiniteGroupTable::symmetric(4)), 5);
    }

    #[test]
    fn names() {
        assert_eq!(FiniteGroupTable::named("cyclic:23").unwrap().order(), 23);
        assert_eq!(FiniteGroupTable::named("sym:3").unwrap().order(), 6);
        assert_eq!(FiniteGroupTable::named("klein4").unwrap().order(), 4);
        assert_eq!(FiniteGroupTable::named("dihedral:3").unwrap().order(), 6);
        for bad in ["cyclic:0", "cyclic:x", "sym:9", "foo", "klein4:2"] {
            assert!(FiniteGroupTable::named(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn structure_predicates() {
        assert!(FiniteGroupTable::cyclic(10).is_cyclic());
        assert!(!FiniteGroupTable::klein4().is_cyclic());
        assert!(FiniteGroupTable::klein4().is_abelian());
        assert!(!FiniteGroupTable::symmetric(3).is_abelian());
    }
}
