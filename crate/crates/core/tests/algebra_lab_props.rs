use proptest::prelude::*;
use relchow::algebra_lab::{
    count_simples, jacobson_radical, nilpotency_index, semisimple_quotient, StructAlgebra,
    DEFAULT_ORACLE_LIMIT,
};
use relchow::grouprings::FiniteGroupTable;

const LIMIT: u64 = DEFAULT_ORACLE_LIMIT;

/// Remainder of `f` modulo monic `g` over `F_p`, coefficients low → high.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        for (i, &c) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - c) * lead % p) % p;
        }
        r.pop();
    }
    r
}

fn divides(g: &[u32], f: &[u32], p: u32) -> bool {
    poly_rem(f, g, p).iter().all(|&c| c == 0)
}

/// All monic polynomials of degree `d` over `F_p`.
fn monic(d: usize, p: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..(p as u64).pow(d as u32)).map(move |mut k| {
        let mut v: Vec<u32> = (0..d)
            .map(|_| {
                let c = (k % p as u64) as u32;
                k /= p as u64;
                c
            })
            .collect();
        v.push(1);
        v
    })
}

fn is_irreducible(g: &[u32], p: u32) -> bool {
    let d = g.len() - 1;
    (1..=d / 2).all(|e| monic(e, p).all(|h| !divides(&h, g, p)))
}

/// Distinct monic irreducible factors of `f`, found by exhaustive search.
fn irreducible_factors(f: &[u32], p: u32) -> Vec<Vec<u32>> {
    (1..f.len())
        .flat_map(|d| monic(d, p))
        .filter(|g| is_irreducible(g, p) && divides(g, f, p))
        .collect()
}

fn monic_poly(p: u32, max_deg: usize) -> impl Strategy<Value = Vec<u32>> {
    (1..=max_deg).prop_flat_map(move |d| {
        proptest::collection::vec(0..p, d).prop_map(|mut v| {
            v.push(1);
            v
        })
    })
}

fn prime() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3), Just(5), Just(7)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    /// `F_p[x]/(f)` has one simple module per distinct irreducible factor of
    /// `f`, and its radical is generated by the squarefree part.
    #[test]
    fn polynomial_quotients_match_factorisation(
        (p, f) in prime().prop_flat_map(|p| (Just(p), monic_poly(p, match p { 2 => 6, 3 => 4, _ => 3 })))
    ) {
        let a = StructAlgebra::polynomial_quotient(p, &f).unwrap();
        let factors = irreducible_factors(&f, p);
        prop_assert_eq!(count_simples(&a, LIMIT).unwrap(), factors.len());
        let squarefree_degree: usize = factors.iter().map(|g| g.len() - 1).sum();
        let j = jacobson_radical(&a, LIMIT).unwrap();
        prop_assert_eq!(j.dim(), (f.len() - 1) - squarefree_degree);
    }

    #[test]
    fn simples_invariant_under_basis_change(
        (p, f, seed) in prime().prop_flat_map(|p| (Just(p), monic_poly(p, 3), any::<u64>()))
    ) {
        let a = StructAlgebra::polynomial_quotient(p, &f).unwrap();
        let n = a.dim();
        // unit lower-triangular change of basis, always invertible
        let mut s = seed;
        let basis: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        match j.cmp(&i) {
                            std::cmp::Ordering::Less => ((s >> 33) % p as u64) as u32,
                            std::cmp::Ordering::Equal => 1,
                            std::cmp::Ordering::Greater => 0,
                        }
                    })
                    .collect()
            })
            .collect();
        let b = a.rebased(&basis).unwrap();
        prop_assert_eq!(count_simples(&a, LIMIT).unwrap(), count_simples(&b, LIMIT).unwrap());
        prop_assert_eq!(
            jacobson_radical(&a, LIMIT).unwrap().dim(),
            jacobson_radical(&b, LIMIT).unwrap().dim()
        );
    }

    #[test]
    fn quotient_by_radical_is_semisimple(
        (p, f) in prime().prop_flat_map(|p| (Just(p), monic_poly(p, 3)))
    ) {
        let a = StructAlgebra::polynomial_quotient(p, &f).unwrap();
        let j = jacobson_radical(&a, LIMIT).unwrap();
        prop_assert!(nilpotency_index(&a, &j).is_some());
        let b = semisimple_quotient(&a, LIMIT).unwrap();
        prop_assert_eq!(jacobson_radical(&b, LIMIT).unwrap().dim(), 0);
    }
}

#[test]
fn cyclic_group_algebras_match_factorisation_of_xn_minus_one() {
    for p in [2u32, 3, 5] {
        for n in (1..=10usize).filter(|&n| (p as usize).pow(n as u32) <= 4096) {
            let a = StructAlgebra::group_algebra(p, &FiniteGroupTable::cyclic(n));
            let mut f = vec![0u32; n + 1];
            f[0] = p - 1;
            f[n] = 1;
            let expected = irreducible_factors(&f, p).len();
            assert_eq!(count_simples(&a, LIMIT).unwrap(), expected, "F_{p}[C_{n}]");
        }
    }
}
