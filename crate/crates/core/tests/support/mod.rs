//! Independent reference implementations shared by the integration
//! tests. Everything here is deliberately naive: dense arithmetic,
//! brute-force enumeration, direct definitions. The library is tested
//! against these, never against itself.
#![allow(dead_code)]

use hvec_core::field::PrimeField;
use hvec_core::matrix::SparseVec;

/// Dense textbook Gauss-Jordan. Returns the nonzero RREF rows and the
/// pivot columns.
pub fn dense_rref(field: PrimeField, mut m: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<u32>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = field.inv(m[rank][c]);
        for x in &mut m[rank] {
            *x = field.mul(*x, inv);
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for cc in 0..cols {
                    let s = field.mul(f, m[rank][cc]);
                    m[r][cc] = field.sub(m[r][cc], s);
                }
            }
        }
        pivots.push(c as u32);
        rank += 1;
    }
    m.truncate(rank);
    (m, pivots)
}

pub fn dense_rank(field: PrimeField, m: Vec<Vec<u64>>) -> usize {
    dense_rref(field, m).1.len()
}

pub fn to_dense_rows(rows: &[SparseVec], cols: usize) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|r| hvec_core::matrix::sparse_to_dense(r, cols))
        .collect()
}

/// Exact binomial coefficient as i64, zero outside 0 <= k <= n. The
/// convention matters: negative upper index is zero here, not the
/// polynomial extension.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All subsets of `set` of size `k`, as sorted vectors.
pub fn subsets_of_size(set: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(set: &[u32], k: usize, start: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        if set.len() - start < k - current.len() {
            return;
        }
        for i in start..set.len() {
            current.push(set[i]);
            rec(set, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(set, k, 0, &mut current, &mut out);
    out
}
