use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Finitely generated abelian group `ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_m` in invariant-factor
/// form: every `dᵢ ≥ 2` and `dᵢ | dᵢ₊₁`. Two values are isomorphic iff equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::new(0, [BigInt::from(order)])
    }

    /// Normalizes an arbitrary list of cyclic orders. A zero order contributes a
    /// free summand, orders `±1` vanish, and the rest are brought into a
    /// divisibility chain.
    pub fn new(rank: usize, orders: impl IntoIterator<Item = BigInt>) -> Self {
        let mut rank = rank;
        let mut torsion = Vec::new();
        for d in orders {
            let d = d.abs();
            if d.is_zero() {
                rank += 1;
            } else if !d.is_one() {
                torsion.push(d);
            }
        }
        FgAbGroup {
            rank,
            torsion: invariant_factors(torsion),
        }
    }

    pub fn from_u64s(rank: usize, orders: &[u64]) -> Self {
        Self::new(rank, orders.iter().map(|&d| BigInt::from(d)))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        FgAbGroup::new(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// Torsion as prime-power orders `(p, p^k)`, sorted by prime then exponent.
    /// Only a formatting aid; returns `None` if a factor does not fit in `u64`.
    pub fn primary_decomposition(&self) -> Option<Vec<(u64, u64)>> {
        let mut out = Vec::new();
        for d in &self.torsion {
            let mut d = d.to_u64()?;
            let mut p = 2u64;
            while p * p <= d {
                if d % p == 0 {
                    let mut q = 1;
                    while d % p == 0 {
                        d /= p;
                        q *= p;
                    }
                    out.push((p, q));
                }
                p += 1;
            }
            if d > 1 {
                out.push((d, d));
            }
        }
        out.sort_unstable();
        Some(out)
    }
}

/// Whether the two groups have the same normal form.
pub fn is_isomorphic(a: &FgAbGroup, b: &FgAbGroup) -> bool {
    a == b
}

/// Pairwise `(gcd, lcm)` exchange. After pass `i`, entry `i` divides every later
/// entry, and later passes only touch entries it already divides.
fn invariant_factors(mut ds: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            let g = ds[i].gcd(&ds[j]);
            let l = ds[i].lcm(&ds[j]);
            ds[i] = g;
            ds[j] = l;
        }
    }
    ds.retain(|d| !d.is_one());
    ds
}

pub(crate) fn write_torsion(f: &mut fmt::Formatter<'_>, rank: usize, torsion: &[BigInt]) -> fmt::Result {
    let mut parts: Vec<String> = Vec::new();
    match rank {
        0 => {}
        1 => parts.push("Z".into()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(torsion.iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        write!(f, "0")
    } else {
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_torsion(f, self.rank, &self.torsion)
    }
}

/// Identifies a finite abelian group given by its operation table, by counting
/// for each prime `p` the elements killed by `p^k`. Independent of any matrix
/// reduction, so it doubles as a test oracle.
///
/// `op[a][b]` is the product, `identity` the neutral index. Commutativity is the
/// caller's responsibility.
pub fn finite_abelian_from_table(op: &[Vec<usize>], identity: usize) -> FgAbGroup {
    let n = op.len();
    if n <= 1 {
        return FgAbGroup::trivial();
    }
    let power = |x: usize, e: u64| {
        let mut acc = identity;
        for _ in 0..e {
            acc = op[acc][x];
        }
        acc
    };
    let mut factors: Vec<BigInt> = Vec::new();
    let mut m = n as u64;
    let mut p = 2u64;
    while m > 1 {
        if m.is_multiple_of(p) {
            let mut k_max = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k_max += 1;
            }
            // log_p #{x : x^(p^k) = 1}
            let mut logs = vec![0u32];
            let mut pk = 1u64;
            for _ in 0..k_max {
                pk *= p;
                let count = (0..n).filter(|&x| power(x, pk) == identity).count() as u64;
                logs.push(count.ilog(p));
            }
            // parts_ge[k] = number of cyclic p-factors of order at least p^k
            for k in 1..=k_max {
                let ge_k = logs[k] - logs[k - 1];
                let ge_next = if k < k_max { logs[k + 1] - logs[k] } else { 0 };
                for _ in 0..ge_k - ge_next {
                    factors.push(BigInt::from(p.pow(k as u32)));
                }
            }
        }
        p += 1;
    }
    FgAbGroup::new(0, factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(rank: usize, t: &[u64]) -> FgAbGroup {
        FgAbGroup::from_u64s(rank, t)
    }

    #[test]
    fn normal_form_merges_coprime() {
        assert_eq!(g(0, &[2, 3]), g(0, &[6]));
        assert_eq!(g(0, &[2, 3]).torsion(), &[BigInt::from(6)]);
        assert_eq!(g(0, &[4, 6]).torsion(), &[BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn zeros_and_units() {
        let x = FgAbGroup::new(1, [0, 1, -1, -4].map(BigInt::from));
        assert_eq!(x.rank(), 2);
        assert_eq!(x.torsion(), &[BigInt::from(4)]);
    }

    #[test]
    fn isomorphism_checks() {
        assert!(is_isomorphic(&g(0, &[2, 3]), &g(0, &[6])));
        assert!(!is_isomorphic(&g(1, &[]), &g(0, &[2])));
        assert!(!is_isomorphic(&g(0, &[4]), &g(0, &[2, 2])));
    }

    #[test]
    fn primary_parts() {
        assert_eq!(
            g(0, &[2, 12]).primary_decomposition().unwrap(),
            vec![(2, 2), (2, 4), (3, 3)]
        );
    }

    fn product_table(orders: &[usize]) -> Vec<Vec<usize>> {
        let n: usize = orders.iter().product();
        let decode = |mut x: usize| {
            orders
                .iter()
                .map(|&o| {
                    let d = x % o;
                    x /= o;
                    d
                })
                .collect::<Vec<_>>()
        };
        let encode = |v: &[usize]| v.iter().rev().zip(orders.iter().rev()).fold(0, |acc, (d, o)| acc * o + d);
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let (va, vb) = (decode(a), decode(b));
                        let s: Vec<usize> = va.iter().zip(&vb).zip(orders).map(|((x, y), o)| (x + y) % o).collect();
                        encode(&s)
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn table_identification() {
        assert_eq!(finite_abelian_from_table(&product_table(&[4]), 0), g(0, &[4]));
        assert_eq!(finite_abelian_from_table(&product_table(&[2, 2]), 0), g(0, &[2, 2]));
        assert_eq!(finite_abelian_from_table(&product_table(&[2, 3]), 0), g(0, &[6]));
        assert_eq!(finite_abelian_from_table(&product_table(&[2, 4, 3]), 0), g(0, &[2, 12]));
        assert_eq!(finite_abelian_from_table(&product_table(&[1]), 0), g(0, &[]));
    }
}
