#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use relchow::abgroup::IntMatrix;

pub fn matrix(rows: usize, cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(lo..=hi, rows * cols).prop_map(move |v| {
        IntMatrix::from_vec(rows, cols, v.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

pub fn any_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| matrix(r, c, -bound, bound))
}

/// Elementary operations `row[i] += k row[j]` (i ≠ j) and row swaps.
pub fn unimodular(n: usize) -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    proptest::collection::vec((0..n.max(1), 0..n.max(1), -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut w = IntMatrix::identity(n);
        let mut w_inv = IntMatrix::identity(n);
        for (i, j, k, swap) in ops {
            if n == 0 {
                break;
            }
            let mut e = IntMatrix::identity(n);
            let mut e_inv = IntMatrix::identity(n);
            if swap {
                e[(i, i)] = BigInt::from(0);
                e[(j, j)] = BigInt::from(0);
                e[(i, j)] = BigInt::from(1);
                e[(j, i)] = BigInt::from(1);
                e_inv = e.clone();
            } else if i != j {
                e[(i, j)] = BigInt::from(k);
                e_inv[(i, j)] = BigInt::from(-k);
            }
            w = &e * &w;
            w_inv = &w_inv * &e_inv;
        }
        (w, w_inv)
    })
}
