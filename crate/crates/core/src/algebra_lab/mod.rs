//! Brute-force oracle for finite-dimensional algebras over `F_p`: Jacobson
//! radical by exhaustive quasi-regularity testing, and the number of simple
//! modules as the Frobenius-fixed dimension of the centre of `A/J(A)`.

mod fp;

use crate::abgroup::FgAbGroup;
use crate::classgroups::is_prime;
use crate::grouprings::FiniteGroupTable;
use crate::Error;

/// Default bound on `p^dim` for exhaustive scans.
pub const DEFAULT_ORACLE_LIMIT: u64 = 1 << 20;

/// Algebra over `F_p` with basis `e_0..e_{d-1}` and `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructAlgebra {
    p: u32,
    dim: usize,
    /// `c[i][j][k]` at index `(i * dim + j) * dim + k`.
    consts: Vec<u32>,
    unit: Vec<u32>,
}

impl StructAlgebra {
    /// Validates associativity on basis triples and the two-sided unit.
    pub fn new(p: u32, dim: usize, consts: Vec<u32>, unit: Vec<u32>) -> Result<Self, Error> {
        let fail = |m: String| Err(Error::InvalidAlgebra(m));
        if !is_prime(u64::from(p)) {
            return fail(format!("characteristic {p} is not prime"));
        }
        if dim == 0 {
            return fail("the zero algebra has no unit".into());
        }
        if consts.len() != dim * dim * dim {
            return fail(format!("expected {} structure constants, got {}", dim * dim * dim, consts.len()));
        }
        if unit.len() != dim {
            return fail(format!("unit has {} coordinates, expected {dim}", unit.len()));
        }
        let a = StructAlgebra {
            p,
            dim,
            consts: consts.into_iter().map(|c| c % p).collect(),
            unit: unit.into_iter().map(|c| c % p).collect(),
        };
        for i in 0..dim {
            let ei = a.basis_vector(i);
            if a.mul(&a.unit, &ei) != ei || a.mul(&ei, &a.unit) != ei {
                return fail(format!("declared unit is not a two-sided identity on e{i}"));
            }
            for j in 0..dim {
                let eij = a.mul(&ei, &a.basis_vector(j));
                for k in 0..dim {
                    let ek = a.basis_vector(k);
                    let left = a.mul(&eij, &ek);
                    let right = a.mul(&ei, &a.mul(&a.basis_vector(j), &ek));
                    if left != right {
                        return fail(format!("product is not associative on (e{i}, e{j}, e{k})"));
                    }
                }
            }
        }
        Ok(a)
    }

    fn from_product(p: u32, dim: usize, unit: Vec<u32>, rule: impl Fn(usize, usize) -> Vec<u32>) -> Self {
        let mut consts = vec![0; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in rule(i, j).into_iter().enumerate() {
                    consts[(i * dim + j) * dim + k] = c % p;
                }
            }
        }
        StructAlgebra::new(p, dim, consts, unit).expect("builder produces a valid algebra")
    }

    /// `F_p^m` with componentwise product.
    pub fn field_product(p: u32, m: usize) -> Self {
        Self::from_product(p, m, vec![1; m], |i, j| {
            let mut v = vec![0; m];
            if i == j {
                v[i] = 1;
            }
            v
        })
    }

    /// Full matrix algebra `M_k(F_p)`, basis `E_{rs}` at index `r*k + s`.
    pub fn matrix_algebra(p: u32, k: usize) -> Self {
        Self::triangular_or_full(p, k, false)
    }

    /// Upper triangular `k x k` matrices over `F_p`.
    pub fn upper_triangular(p: u32, k: usize) -> Self {
        Self::triangular_or_full(p, k, true)
    }

    fn triangular_or_full(p: u32, k: usize, upper: bool) -> Self {
        let units: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| (0..k).map(move |s| (r, s)))
            .filter(|&(r, s)| !upper || r <= s)
            .collect();
        let dim = units.len();
        let index = |rs: (usize, usize)| units.iter().position(|&u| u == rs);
        let mut unit = vec![0; dim];
        for r in 0..k {
            unit[index((r, r)).expect("diagonal present")] = 1;
        }
        Self::from_product(p, dim, unit, |i, j| {
            let ((r, s), (t, u)) = (units[i], units[j]);
            let mut v = vec![0; dim];
            if s == t {
                v[index((r, u)).expect("closed under product")] = 1;
            }
            v
        })
    }

    /// `F_p[x]/(x²)`.
    pub fn dual_numbers(p: u32) -> Self {
        Self::polynomial_quotient(p, &[0, 0, 1]).expect("x^2 is monic")
    }

    /// `F_p[x]/(f)` for monic `f` (coefficients from the constant term up),
    /// basis `1, x, …, x^{deg f − 1}`.
    pub fn polynomial_quotient(p: u32, f: &[u32]) -> Result<Self, Error> {
        let deg = f.len().checked_sub(1).filter(|&d| d >= 1);
        let Some(deg) = deg.filter(|&d| f[d] % p == 1) else {
            return Err(Error::InvalidAlgebra("modulus must be monic of degree at least 1".into()));
        };
        // x^m reduced mod f for m < 2 deg − 1
        let mut powers: Vec<Vec<u32>> = Vec::new();
        let mut cur = vec![0u32; deg];
        cur[0] = 1;
        for _ in 0..(2 * deg - 1) {
            powers.push(cur.clone());
            let top = cur[deg - 1];
            let mut next = vec![0u32; deg];
            next[1..deg].copy_from_slice(&cur[..deg - 1]);
            for (n, &c) in next.iter_mut().zip(f) {
                *n = (*n + (p - c % p) * top % p) % p;
            }
            cur = next;
        }
        let mut unit = vec![0; deg];
        unit[0] = 1;
        Ok(Self::from_product(p, deg, unit, |i, j| powers[i + j].clone()))
    }

    /// Group algebra `F_p[G]`.
    pub fn group_algebra(p: u32, g: &FiniteGroupTable) -> Self {
        let n = g.order();
        let mut unit = vec![0; n];
        unit[g.identity()] = 1;
        Self::from_product(p, n, unit, |a, b| {
            let mut v = vec![0; n];
            v[g.mul(a, b)] = 1;
            v
        })
    }

    /// Direct product `A × B`.
    pub fn product(&self, other: &StructAlgebra) -> Result<Self, Error> {
        if self.p != other.p {
            return Err(Error::InvalidAlgebra("factors have different characteristic".into()));
        }
        let (d1, d2) = (self.dim, other.dim);
        let dim = d1 + d2;
        let mut unit = self.unit.clone();
        unit.extend(&other.unit);
        Ok(Self::from_product(self.p, dim, unit, |i, j| {
            let mut v = vec![0; dim];
            if i < d1 && j < d1 {
                v[..d1].copy_from_slice(&self.mul(&self.basis_vector(i), &self.basis_vector(j)));
            } else if i >= d1 && j >= d1 {
                v[d1..].copy_from_slice(&other.mul(&other.basis_vector(i - d1), &other.basis_vector(j - d1)));
            }
            v
        }))
    }

    /// The same algebra in the basis whose `i`-th vector is row `i` of `basis`.
    pub fn rebased(&self, basis: &[Vec<u32>]) -> Result<Self, Error> {
        let p = self.p;
        if basis.len() != self.dim || basis.iter().any(|r| r.len() != self.dim) {
            return Err(Error::InvalidAlgebra("basis change must be a square matrix".into()));
        }
        let basis: Vec<Vec<u32>> = basis.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
        let inv = fp::invert(&basis, p).ok_or_else(|| Error::InvalidAlgebra("basis change is singular".into()))?;
        // coordinates c with c · basis = v, i.e. c = v · basis⁻¹
        let coords = |v: &[u32]| -> Vec<u32> {
            let mut c = vec![0u32; self.dim];
            for (k, &vk) in v.iter().enumerate() {
                fp::axpy(&mut c, vk, &inv[k], p);
            }
            c
        };
        let unit = coords(&self.unit);
        Ok(Self::from_product(p, self.dim, unit, |i, j| coords(&self.mul(&basis[i], &basis[j]))))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[u32] {
        &self.consts
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let d = self.dim;
        let p = u64::from(self.p);
        let mut acc = vec![0u64; d];
        for (i, &ai) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &bj) in b.iter().enumerate().filter(|(_, &x)| x != 0) {
                let w = u64::from(ai) * u64::from(bj) % p;
                let row = &self.consts[(i * d + j) * d..(i * d + j + 1) * d];
                for (k, &c) in row.iter().enumerate() {
                    acc[k] = (acc[k] + w * u64::from(c)) % p;
                }
            }
        }
        acc.into_iter().map(|x| x as u32).collect()
    }

    fn pow(&self, a: &[u32], mut e: u32) -> Vec<u32> {
        let mut acc = self.unit.clone();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `p^dim`, the number of elements.
    pub fn size(&self) -> u128 {
        u128::from(self.p).checked_pow(self.dim as u32).unwrap_or(u128::MAX)
    }

    fn check_guard(&self, limit: u64) -> Result<(), Error> {
        if self.size() > u128::from(limit) {
            return Err(Error::OracleTooLarge {
                size: self.size(),
                limit,
            });
        }
        Ok(())
    }

    fn encode(&self, v: &[u32]) -> usize {
        v.iter().rev().fold(0usize, |acc, &x| acc * self.p as usize + x as usize)
    }

    fn decode(&self, mut idx: usize) -> Vec<u32> {
        (0..self.dim)
            .map(|_| {
                let d = (idx % self.p as usize) as u32;
                idx /= self.p as usize;
                d
            })
            .collect()
    }

    /// Whether `z` has a left inverse, decided by solving `b · z = 1` for `b`.
    fn is_left_invertible(&self, z: &[u32]) -> bool {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|i| self.mul(&self.basis_vector(i), z)).collect();
        fp::solve_columns(&cols, &self.unit, self.p).is_some()
    }

    /// Quotient `A / I` for a two-sided ideal `I`, basis given by the
    /// standard vectors outside the pivot columns of `I`.
    fn quotient(&self, ideal: &Subspace) -> StructAlgebra {
        let p = self.p;
        let keep: Vec<usize> = (0..self.dim).filter(|c| !ideal.pivots.contains(c)).collect();
        let project = |v: &[u32]| -> Vec<u32> {
            let r = ideal.reduce(v, p);
            keep.iter().map(|&c| r[c]).collect()
        };
        let embed = |i: usize| self.basis_vector(keep[i]);
        let unit = project(&self.unit);
        Self::from_product(p, keep.len(), unit, |i, j| project(&self.mul(&embed(i), &embed(j))))
    }
}

/// Subspace of `F_p^d` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn spanned_by(mut vectors: Vec<Vec<u32>>, p: u32) -> Self {
        let pivots = fp::rref(&mut vectors, p);
        Subspace {
            basis: vectors,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// `v` minus its component along the subspace (zero at pivot columns).
    fn reduce(&self, v: &[u32], p: u32) -> Vec<u32> {
        let mut r = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if r[pc] != 0 {
                let k = p - r[pc];
                fp::axpy(&mut r, k, row, p);
            }
        }
        r
    }

    pub fn contains(&self, v: &[u32], p: u32) -> bool {
        self.reduce(v, p).iter().all(|&x| x == 0)
    }
}

/// Jacobson radical: all `x` such that `1 − y x` is left invertible for every
/// `y`. The set `{y x}` is the subspace `A x`, which is enumerated in full.
pub fn jacobson_radical(a: &StructAlgebra, limit: u64) -> Result<Subspace, Error> {
    a.check_guard(limit)?;
    let p = a.p;
    let size = a.size() as usize;
    // 0 unknown, 1 invertible, 2 not
    let mut unit_cache = vec![0u8; size];
    let mut members = Vec::new();
    for idx in 0..size {
        let x = a.decode(idx);
        let ax = Subspace::spanned_by((0..a.dim).map(|i| a.mul(&a.basis_vector(i), &x)).collect(), p);
        let k = ax.dim();
        let mut digits = vec![0u32; k];
        let mut z = vec![0u32; a.dim];
        let quasi_regular = loop {
            let one_minus = fp::sub(&a.unit, &z, p);
            let key = a.encode(&one_minus);
            if unit_cache[key] == 0 {
                unit_cache[key] = if a.is_left_invertible(&one_minus) { 1 } else { 2 };
            }
            if unit_cache[key] == 2 {
                break false;
            }
            // odometer step through all of A x
            let mut pos = 0;
            loop {
                if pos == k {
                    break;
                }
                fp::axpy(&mut z, 1, &ax.basis[pos], p);
                digits[pos] += 1;
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break true;
            }
        };
        if quasi_regular {
            members.push(x);
        }
    }
    let j = Subspace::spanned_by(members.clone(), p);
    debug_assert_eq!(
        u128::from(p).pow(j.dim() as u32),
        members.len() as u128,
        "quasi-regular set is a subspace"
    );
    Ok(j)
}

/// Smallest `k` with `J^k = 0`, or `None` if the powers stabilize above zero.
pub fn nilpotency_index(a: &StructAlgebra, j: &Subspace) -> Option<usize> {
    let p = a.p;
    let mut power = j.clone();
    let mut k = 1;
    while power.dim() > 0 {
        let products: Vec<Vec<u32>> = power
            .basis
            .iter()
            .flat_map(|x| j.basis.iter().map(move |y| a.mul(x, y)))
            .collect();
        let next = Subspace::spanned_by(products, p);
        if next.dim() == power.dim() {
            return None;
        }
        power = next;
        k += 1;
    }
    Some(k)
}

/// Whether the subspace is a two-sided ideal.
pub fn is_two_sided_ideal(a: &StructAlgebra, s: &Subspace) -> bool {
    (0..a.dim).all(|i| {
        let e = a.basis_vector(i);
        s.basis
            .iter()
            .all(|x| s.contains(&a.mul(&e, x), a.p) && s.contains(&a.mul(x, &e), a.p))
    })
}

/// `A / J(A)`.
pub fn semisimple_quotient(a: &StructAlgebra, limit: u64) -> Result<StructAlgebra, Error> {
    let j = jacobson_radical(a, limit)?;
    Ok(a.quotient(&j))
}

/// Number of simple right modules: simple factors of `A/J`, counted as the
/// dimension of the Frobenius-fixed part of its centre.
pub fn count_simples(a: &StructAlgebra, limit: u64) -> Result<usize, Error> {
    let b = semisimple_quotient(a, limit)?;
    let (p, m) = (b.p, b.dim);
    // z commutes with every basis vector: Σ_i z_i (c[i][k][l] − c[k][i][l]) = 0
    let equations: Vec<Vec<u32>> = (0..m)
        .flat_map(|k| (0..m).map(move |l| (k, l)))
        .map(|(k, l)| {
            (0..m)
                .map(|i| {
                    let ik = b.consts[(i * m + k) * m + l];
                    let ki = b.consts[(k * m + i) * m + l];
                    (ik + p - ki) % p
                })
                .collect()
        })
        .collect();
    let centre = fp::nullspace(&equations, m, p);
    // Frobenius is F_p-linear on the commutative centre; count its fixed points.
    let moved: Vec<Vec<u32>> = centre.iter().map(|z| fp::sub(&b.pow(z, p), z, p)).collect();
    // columns of (F − 1) in ambient coordinates; nullity in centre coordinates
    let rows: Vec<Vec<u32>> = (0..m).map(|r| moved.iter().map(|c| c[r]).collect()).collect();
    Ok(centre.len() - fp::rank(&rows, p))
}

/// `K_0` of finite-length modules, `ℤ^(number of simples)` by dévissage.
pub fn k0_finite_length(a: &StructAlgebra, limit: u64) -> Result<FgAbGroup, Error> {
    Ok(FgAbGroup::free(count_simples(a, limit)?))
}

/// Rational Wedderburn factor count of `Q[Cyc_n]`: one factor `Q(zeta_d)` per
/// divisor `d` of `n`.
pub fn cyclic_wedderburn_oracle(n: u64) -> u64 {
    assert!(n >= 1, "group order must be positive");
    (1..=n).filter(|d| n.is_multiple_of(*d)).count() as u64
}
