//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//! Tolerances (time budgets, sample sizes, seeds) are pinned below.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use relchow::abgroup::{
    direct_sum, invert_integer, kernel, smith_normal_form, AbMap, FgAbGroup, GroupExpr, IntMatrix,
    Presentation,
};
use relchow::algebra_lab::{count_simples, cyclic_wedderburn_oracle, StructAlgebra, DEFAULT_ORACLE_LIMIT};
use relchow::classgroups::{form_class_group, validate_discriminant, FormClassTable};
use relchow::exactseq::{chow_from_bracket, MiddleBracket};
use relchow::grouprings::{
    ch0_group_ring, ch1_group_ring, cyclic_subgroup_classes, FiniteGroupTable, GroupRingSpec, RingBase,
};
use relchow::orders::{
    chain_length_rho, chow_group, dvr_cycle_group, k0_decomposition, CurveSpec, FieldKind,
    HereditaryLocalType, OrderBase, OrderSpec,
};

const AC1_BUDGET: Duration = Duration::from_secs(1);
const AC2_BUDGET: Duration = Duration::from_secs(5);
const AC6_BUDGET: Duration = Duration::from_secs(5);
/// Fundamental discriminants `-AC6_SLICE <= D < 0` get the exhaustive axiom check.
const AC6_SLICE: i64 = 3000;
const AC5_MAX_DEGREE: u32 = 8;
const AC7_BRACKETS: usize = 500;
const AC7_SNFS: usize = 1000;
const AC7_MAX_SIDE: usize = 8;
const AC7_ENTRY_BOUND: i64 = 50;
const AC7_SEED: u64 = 0x5eed_ac07;
const AC8_WEDDERBURN_MAX: u64 = 200;
const AC9_MAX_EXPONENT: u32 = 6;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(label: &str, start: Instant, budget: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < budget, || format!("{label} took {t:?}, budget {budget:?}"))?;
    Ok(format!("{label} in {:.3} s (< {} s)", t.as_secs_f64(), budget.as_secs()))
}

fn z_group_ring(g: FiniteGroupTable) -> GroupRingSpec {
    GroupRingSpec::new(g, RingBase::Integers).unwrap()
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["relchow", "--no-timestamp", "groupring", "--group", "cyclic:23", "--ring", "Z", "--dim", "0"];
    let code = relchow_cli::run(args, &mut out, &mut err);
    let elapsed = within("groupring cyclic:23 / Z / dim 0", start, AC1_BUDGET)?;
    ensure(code == 0, || format!("exit status {code}: {}", String::from_utf8_lossy(&err)))?;
    let report: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let g = relchow_cli::json::group_from_json(&report["result"])?;
    ensure(g == GroupExpr::from(FgAbGroup::cyclic(3)), || format!("got {g}"))?;
    Ok(format!("{elapsed}: Z/3"))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let mut groups: Vec<(String, FiniteGroupTable)> = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 17, 19]
        .into_iter()
        .map(|n| (format!("cyclic:{n}"), FiniteGroupTable::cyclic(n)))
        .collect();
    groups.push(("klein4".into(), FiniteGroupTable::klein4()));
    for (name, g) in &groups {
        let ch0 = ch0_group_ring(&z_group_ring(g.clone())).map_err(|e| e.to_string())?;
        ensure(ch0.value.is_trivial(), || format!("{name}: CH_0 = {}", ch0.value))?;
    }
    let c23 = ch0_group_ring(&z_group_ring(FiniteGroupTable::cyclic(23))).map_err(|e| e.to_string())?;
    ensure(!c23.value.is_trivial(), || "cyclic:23 has trivial CH_0".into())?;
    let elapsed = within("classification", start, AC2_BUDGET)?;
    Ok(format!("{} groups trivial, cyclic:23 = {}; {elapsed}", groups.len(), c23.value))
}

/// For groups all of whose characters are rational and realized over `Z`,
/// the rational Wedderburn factors are in bijection with the simple modules
/// of `F_q[G]` for any prime `q` not dividing `|G|`.
fn modular_factor_count(g: &FiniteGroupTable, q: u32) -> usize {
    count_simples(&StructAlgebra::group_algebra(q, g), DEFAULT_ORACLE_LIMIT).unwrap()
}

fn ac3() -> Outcome {
    for p in [3usize, 5, 7, 11, 13] {
        let ch1 = ch1_group_ring(&z_group_ring(FiniteGroupTable::cyclic(p))).value;
        ensure(ch1 == GroupExpr::free(2), || format!("cyclic:{p} over Z: {ch1}"))?;
        let oracle = cyclic_wedderburn_oracle(p as u64) as usize;
        ensure(oracle == 2, || format!("cyclic:{p}: divisor oracle {oracle}"))?;
    }
    for p in [3u64, 5] {
        let spec = GroupRingSpec::new(FiniteGroupTable::cyclic(p as usize), RingBase::Cyclotomic(p)).unwrap();
        let ch1 = ch1_group_ring(&spec).value;
        ensure(ch1 == GroupExpr::free(p as usize), || format!("cyclic:{p} over Z[zeta_{p}]: {ch1}"))?;
    }
    for (name, g, expected, q) in [
        ("klein4", FiniteGroupTable::klein4(), 4, 3),
        ("sym:3", FiniteGroupTable::symmetric(3), 3, 5),
    ] {
        let ch1 = ch1_group_ring(&z_group_ring(g.clone())).value;
        ensure(ch1 == GroupExpr::free(expected), || format!("{name}: {ch1}"))?;
        let oracle = modular_factor_count(&g, q);
        ensure(oracle == expected, || format!("{name}: F_{q}-oracle counts {oracle}"))?;
    }
    Ok("Z^2 for p in {3,5,7,11,13}; Z^p over Z[zeta_p]; klein4 Z^4, sym:3 Z^3 (modular oracle agrees)".into())
}

fn ac4() -> Outcome {
    let base = OrderBase::Curve(CurveSpec::projective_line(FieldKind::General));
    let o = OrderSpec::split_maximal(base, 2)
        .with_local_type("0", vec![1, 1])
        .map_err(|e| e.to_string())?;
    let ch0 = chow_group(&o, 0).map_err(|e| e.to_string())?.value;
    let ch1 = chow_group(&o, 1).map_err(|e| e.to_string())?.value;
    let rho = chain_length_rho(&o).map_err(|e| e.to_string())?;
    let k0 = k0_decomposition(&o).map_err(|e| e.to_string())?.value;
    ensure(ch0 == GroupExpr::free(2), || format!("CH_0 = {ch0}"))?;
    ensure(ch1 == GroupExpr::free(1), || format!("CH_1 = {ch1}"))?;
    ensure(rho == 1, || format!("rho = {rho}"))?;
    ensure(k0 == GroupExpr::free(3), || format!("K_0 = {k0}"))?;
    Ok("CH_0 = Z^2, CH_1 = Z, rho = 1, K_0 = Z^3".into())
}

/// Every composition of `n`, as block lists.
fn compositions(n: u32) -> Vec<Vec<u32>> {
    (0..1u32 << (n - 1))
        .map(|mask| {
            let mut blocks = vec![1];
            for bit in 0..n - 1 {
                if mask >> bit & 1 == 1 {
                    blocks.push(1);
                } else {
                    *blocks.last_mut().unwrap() += 1;
                }
            }
            blocks
        })
        .collect()
}

fn ac5() -> Outcome {
    let t11 = HereditaryLocalType::new(vec![1, 1]).unwrap();
    ensure(dvr_cycle_group(&t11) == FgAbGroup::free(2), || "blocks (1,1)".into())?;
    let mut checked = 0;
    for n in 1..=AC5_MAX_DEGREE {
        let maximal = dvr_cycle_group(&HereditaryLocalType::maximal(n));
        ensure(maximal == FgAbGroup::free(1), || format!("blocks ({n}) gave {maximal}"))?;
        for blocks in compositions(n) {
            let r = blocks.len();
            let g = dvr_cycle_group(&HereditaryLocalType::new(blocks.clone()).unwrap());
            ensure(g == FgAbGroup::free(r), || format!("blocks {blocks:?} gave {g}"))?;
            checked += 1;
        }
    }
    Ok(format!("all {checked} block compositions with n <= {AC5_MAX_DEGREE} give Z^(#blocks)"))
}

fn ac6() -> Outcome {
    let start = Instant::now();
    let expect = |d: i64, g: FgAbGroup| -> Result<(), String> {
        let got = form_class_group(d).map_err(|e| e.to_string())?;
        ensure(got == g, || format!("Cl({d}) = {got}, expected {g}"))
    };
    expect(-23, FgAbGroup::cyclic(3))?;
    expect(-4, FgAbGroup::trivial())?;
    expect(-84, FgAbGroup::from_u64s(0, &[2, 2]))?;
    for d in [-3, -4, -7, -8, -11] {
        expect(d, FgAbGroup::trivial())?;
    }
    let mut tables = 0;
    for d in (-AC6_SLICE..0).filter(|&d| validate_discriminant(d).is_ok()) {
        let t = FormClassTable::new(d).map_err(|e| e.to_string())?;
        t.check_group_axioms().map_err(|e| format!("D = {d}: {e}"))?;
        let order = t.group().order().unwrap();
        ensure(order == BigInt::from(t.class_number()), || format!("D = {d}: |group| != h"))?;
        tables += 1;
    }
    let elapsed = within("exhaustive checks", start, AC6_BUDGET)?;
    Ok(format!("named values exact; axioms verified on {tables} discriminants; {elapsed}"))
}

fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    IntMatrix::try_from_rows(entries.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(), cols).unwrap()
}

/// Random unimodular `W` with its inverse, from elementary row operations.
#[allow(clippy::needless_range_loop)]
fn random_unimodular(rng: &mut StdRng, n: usize) -> (IntMatrix, IntMatrix) {
    let mut w: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut w_inv = w.clone();
    for _ in 0..3 * n {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let k = rng.gen_range(-2i64..=2);
        // W <- E W with E = I + k e_ij;  W^-1 <- W^-1 E^-1
        for c in 0..n {
            w[i][c] += k * w[j][c];
        }
        for r in 0..n {
            w_inv[r][j] -= k * w_inv[r][i];
        }
    }
    let big = |m: Vec<Vec<i64>>| {
        IntMatrix::try_from_rows(m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(), n).unwrap()
    };
    (big(w), big(w_inv))
}

/// `Z^a --iota--> B --pi--> C` with `B ≅ Z^a/im(d) ⊕ Z^c` in a scrambled
/// basis and `pi` injective on the free part, so the middle is exact.
fn random_exact_bracket(rng: &mut StdRng) -> (MiddleBracket, FgAbGroup) {
    let a = rng.gen_range(1..=4);
    let k = rng.gen_range(0..=3);
    let c = rng.gen_range(0..=3);
    let e = rng.gen_range(0..=2);
    let d = random_matrix(rng, a, k, 6);
    let mut m = random_matrix(rng, c + e, c, 5);
    while smith_normal_form(&m).rank() < c {
        m = random_matrix(rng, c + e, c, 5);
    }
    let (w, w_inv) = random_unimodular(rng, a + c);
    let b_rel = d.block_diag(&IntMatrix::zeros(c, 0));
    let incl = IntMatrix::identity(a).hstack(&IntMatrix::zeros(a, c)).unwrap().transpose();
    let proj = IntMatrix::zeros(c + e, a).hstack(&m).unwrap();
    let b = Presentation::new(a + c, &w * &b_rel).unwrap();
    let iota = AbMap::new(Presentation::free(a), b.clone(), &w * &incl).unwrap();
    let pi = AbMap::new(b, Presentation::free(c + e), &proj * &w_inv).unwrap();
    let expected = Presentation::new(a, d).unwrap().group();
    (MiddleBracket::new(iota, pi, None).unwrap(), expected)
}

fn ac7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(AC7_SEED);
    for i in 0..AC7_BRACKETS {
        let (b, expected) = random_exact_bracket(&mut rng);
        let chow = chow_from_bracket(&b, true).map_err(|e| format!("bracket {i}: {e}"))?;
        let ker = kernel(b.pi());
        ensure(chow == ker && chow == expected, || format!("bracket {i}: chow {chow}, ker {ker}, expected {expected}"))?;
    }
    for i in 0..AC7_SNFS {
        let rows = rng.gen_range(1..=AC7_MAX_SIDE);
        let cols = rng.gen_range(1..=AC7_MAX_SIDE);
        let m = random_matrix(&mut rng, rows, cols, AC7_ENTRY_BOUND);
        let f = smith_normal_form(&m);
        ensure(&(&f.u * &m) * &f.v == f.s, || format!("snf {i}: u m v != s for {m}"))?;
        let unit = |x: &IntMatrix| {
            x.determinant().is_ok_and(|d| d == BigInt::from(1) || d == BigInt::from(-1))
        };
        ensure(unit(&f.u) && unit(&f.v), || format!("snf {i}: non-unimodular transform"))?;
        let diag = f.diagonal();
        for r in 0..rows {
            for c in 0..cols {
                ensure(r == c || f.s[(r, c)] == BigInt::from(0), || format!("snf {i}: off-diagonal entry"))?;
            }
        }
        for w in diag.windows(2) {
            let divides = if w[0] == BigInt::from(0) { w[1] == BigInt::from(0) } else { &w[1] % &w[0] == BigInt::from(0) };
            ensure(w[0] >= BigInt::from(0) && divides, || format!("snf {i}: diagonal {diag:?} not a divisibility chain"))?;
        }
    }
    Ok(format!("{AC7_BRACKETS} brackets, {AC7_SNFS} SNFs (<= {AC7_MAX_SIDE}x{AC7_MAX_SIDE}, |entries| <= {AC7_ENTRY_BOUND}), 0 failures"))
}

fn ac8() -> Outcome {
    let simples = |a: &StructAlgebra| count_simples(a, DEFAULT_ORACLE_LIMIT).map_err(|e| e.to_string());
    let mut cases = 0;
    for p in [2u32, 3] {
        for k in 1..=3 {
            let n = simples(&StructAlgebra::matrix_algebra(p, k))?;
            ensure(n == 1, || format!("M_{k}(F_{p}): {n}"))?;
            cases += 1;
        }
        for k in 2..=3 {
            let n = simples(&StructAlgebra::upper_triangular(p, k))?;
            ensure(n == k, || format!("upper triangular {k} over F_{p}: {n}"))?;
            cases += 1;
        }
        for m in 1..=4 {
            let n = simples(&StructAlgebra::field_product(p, m))?;
            ensure(n == m, || format!("F_{p}^{m}: {n}"))?;
            cases += 1;
        }
        let n = simples(&StructAlgebra::dual_numbers(p))?;
        ensure(n == 1, || format!("dual numbers over F_{p}: {n}"))?;
        cases += 1;
    }
    for n in 1..=AC8_WEDDERBURN_MAX {
        let t = cyclic_subgroup_classes(&FiniteGroupTable::cyclic(n as usize)) as u64;
        let w = cyclic_wedderburn_oracle(n);
        ensure(t == w, || format!("n = {n}: {t} cyclic subgroup classes, {w} Wedderburn factors"))?;
    }
    Ok(format!("{cases} algebras match; Wedderburn oracle agrees for n <= {AC8_WEDDERBURN_MAX}"))
}

fn ac9() -> Outcome {
    let two = BigUint::from(2u32);
    for a in 1..=AC9_MAX_EXPONENT {
        let g: GroupExpr = FgAbGroup::new(1, [BigInt::from(2).pow(a), BigInt::from(3)]).into();
        let inv = invert_integer(&g, &two);
        let expected: GroupExpr = FgAbGroup::from_u64s(1, &[3]).into();
        ensure(inv == expected, || format!("a = {a}: {inv}"))?;
    }
    let mut paths = 0;
    for n in [2u32, 3, 5] {
        for blocks in compositions(n) {
            let curve = CurveSpec::unspecified("C", FieldKind::General, true);
            let mut o = OrderSpec::split_maximal(OrderBase::Curve(curve), n)
                .with_local_type("p", blocks)
                .map_err(|e| e.to_string())?;
            o.split = false;
            let d = chow_group(&o, 0).map_err(|e| e.to_string())?;
            let want = format!("after inverting {n}");
            ensure(!d.value.symbols().is_empty(), || "no symbolic summand".into())?;
            for s in d.value.symbols() {
                ensure(s.qualifier().as_deref() == Some(want.as_str()), || format!("n = {n}: symbol {s}"))?;
            }
            ensure(d.warnings.iter().any(|w| w.contains(&want)), || format!("n = {n}: no warning"))?;
            let plain = direct_sum(&GroupExpr::symbol("Pic(C)"), &GroupExpr::free(chain_length_rho(&o).unwrap()));
            ensure(d.value.without_qualifiers() == plain, || format!("n = {n}: {}", d.value))?;
            paths += 1;
        }
    }
    Ok(format!("Z + Z/2^a + Z/3 -> Z + Z/3 for a <= {AC9_MAX_EXPONENT}; qualifier on {paths} non-split chow paths"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
    ];
    let mut failed = 0;
    for (id, check) in criteria {
        match check() {
            Ok(detail) => println!("{id} PASS {detail}"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL {detail}");
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
