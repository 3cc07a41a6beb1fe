//! Dense linear algebra over the prime field `F_p`. Vectors are `Vec<u32>`
//! with entries in `0..p`.

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "zero has no inverse");
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let (mut base, mut acc, p64) = (u64::from(a % p), 1u64, u64::from(p));
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}

/// `dst += k * src`
pub(crate) fn axpy(dst: &mut [u32], k: u32, src: &[u32], p: u32) {
    if k == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = ((u64::from(*d) + u64::from(k) * u64::from(s)) % u64::from(p)) as u32;
    }
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| (x + p - y) % p).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(rows: &mut Vec<Vec<u32>>, p: u32) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = ((u64::from(*x) * u64::from(inv)) % u64::from(p)) as u32;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let k = p - row[c];
                axpy(row, k, &pivot_row, p);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(rows: &[Vec<u32>], p: u32) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, p).len()
}

/// Basis of `{x : A x = 0}` where `a` lists the rows of `A` (each of length `n`).
pub(crate) fn nullspace(a: &[Vec<u32>], n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u32; n];
            v[f] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Solves `A x = b` for square or rectangular `A` given by columns.
pub(crate) fn solve_columns(cols: &[Vec<u32>], b: &[u32], p: u32) -> Option<Vec<u32>> {
    let n = cols.len();
    let m = b.len();
    let mut aug: Vec<Vec<u32>> = (0..m)
        .map(|i| cols.iter().map(|c| c[i]).chain(std::iter::once(b[i])).collect())
        .collect();
    let pivots = rref(&mut aug, p);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![0u32; n];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[n];
    }
    Some(x)
}

/// Inverse of a square matrix given by rows.
pub(crate) fn invert(rows: &[Vec<u32>], p: u32) -> Option<Vec<Vec<u32>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<u32>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| u32::from(i == j)));
            v
        })
        .collect();
    let pivots = rref(&mut aug, p);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
