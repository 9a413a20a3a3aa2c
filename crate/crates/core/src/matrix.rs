//! Sparse exact linear algebra over GF(p).
//!
//! The only algorithm here is incremental Gaussian elimination with a
//! dense scatter buffer. Rows are kept sparse; a row is folded into the
//! echelon set by scattering it into the buffer, eliminating pivot
//! columns in increasing order, and gathering what survives. Reduced
//! row echelon form is canonical for a given row space, so every
//! consumer that needs a canonical object (subspaces, cohomology bases)
//! goes through [`Echelon::into_rref`].

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::field::PrimeField;

/// Sparse vector: (column, coefficient) pairs, columns strictly
/// increasing, coefficients nonzero canonical residues.
pub type SparseVec = Vec<(u32, u64)>;

/// Builds a well-formed sparse vector from arbitrary (column, value)
/// pairs: sorts, merges duplicates, drops zeros.
pub fn sparse_from_pairs(
    field: PrimeField,
    pairs: impl IntoIterator<Item = (u32, u64)>,
) -> SparseVec {
    let mut pairs: Vec<(u32, u64)> = pairs.into_iter().collect();
    pairs.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(pairs.len());
    for (c, v) in pairs {
        let v = v % field.modulus();
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = field.add(last.1, v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

pub fn sparse_to_dense(v: &[(u32, u64)], len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for &(c, x) in v {
        out[c as usize] = x;
    }
    out
}

pub fn sparse_from_dense(v: &[u64]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|&(_, &x)| x != 0)
        .map(|(c, &x)| (c as u32, x))
        .collect()
}

/// Sparse matrix, row major. `data.len() == rows`; zero rows are
/// empty vectors, not absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<SparseVec>,
}

impl FieldMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FieldMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data
            .iter()
            .all(|r| r.windows(2).all(|w| w[0].0 < w[1].0) && r.iter().all(|e| (e.0 as usize) < cols && e.1 != 0)));
        FieldMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                data[c as usize].push((r as u32, v));
            }
        }
        FieldMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Stacks `other` below `self`. Column counts must agree.
    pub fn vstack(&self, other: &FieldMatrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        FieldMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rank(&self, field: PrimeField) -> usize {
        let mut ech = Echelon::new(field, self.cols);
        ech.insert_all_sparsest_first(self.data.iter());
        ech.rank()
    }

    pub fn mul_dense(&self, field: PrimeField, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut acc = 0u64;
                for &(c, a) in row {
                    acc = field.add(acc, field.mul(a, v[c as usize]));
                }
                acc
            })
            .collect()
    }
}

/// Incremental echelon form. Inserted rows are reduced against all
/// current pivot rows; a surviving row claims a new pivot column.
/// Invariants between calls: each stored row has a leading coefficient
/// of one at its pivot column and no support at any other current
/// pivot column. Rows inserted later can claim pivots inside earlier
/// rows' support, so full reduction happens only in [`into_rref`].
pub struct Echelon {
    field: PrimeField,
    cols: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<u32>,
    pivot_row: Vec<u32>,
    buf: Vec<u64>,
}

const NO_ROW: u32 = u32::MAX;

impl Echelon {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![NO_ROW; cols],
            buf: vec![0; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Reduces `row` against the current echelon set. Returns the new
    /// pivot column if the row was independent, None if it reduced to
    /// zero. The buffer is all zeros again on return.
    pub fn insert(&mut self, row: &[(u32, u64)]) -> Option<u32> {
        let field = self.field;
        let mut heap: BinaryHeap<Reverse<u32>> = BinaryHeap::with_capacity(row.len());
        for &(c, v) in row {
            debug_assert!((c as usize) < self.cols && v != 0 && v < field.modulus());
            if self.buf[c as usize] == 0 {
                heap.push(Reverse(c));
            }
            self.buf[c as usize] = field.add(self.buf[c as usize], v % field.modulus());
        }
        let mut pivot: Option<(u32, u64)> = None;
        let mut support: Vec<(u32, u64)> = Vec::new();
        while let Some(Reverse(c)) = heap.pop() {
            let v = self.buf[c as usize];
            if v == 0 {
                continue;
            }
            self.buf[c as usize] = 0;
            let r = self.pivot_row[c as usize];
            if r == NO_ROW {
                if pivot.is_none() {
                    pivot = Some((c, v));
                } else {
                    support.push((c, v));
                }
            } else {
                // buf -= v * rows[r]; the pivot row's leading one is at c,
                // already cleared, so only the tail scatters.
                for &(c2, w) in &self.rows[r as usize][1..] {
                    let old = self.buf[c2 as usize];
                    let new = field.sub(old, field.mul(v, w));
                    if old == 0 && new != 0 {
                        heap.push(Reverse(c2));
                    }
                    self.buf[c2 as usize] = new;
                }
            }
        }
        let (pc, pv) = pivot?;
        let inv = field.inv(pv);
        let mut entries: SparseVec = Vec::with_capacity(1 + support.len());
        entries.push((pc, 1));
        entries.extend(support.into_iter().map(|(c, v)| (c, field.mul(v, inv))));
        self.pivot_row[pc as usize] = self.rows.len() as u32;
        self.pivots.push(pc);
        self.rows.push(entries);
        Some(pc)
    }

    /// Inserts rows in order of increasing support size. Cheap stand-in
    /// for a fill-minimizing pivot order; the resulting RREF does not
    /// depend on it, only the intermediate fill does.
    pub fn insert_all_sparsest_first<'a>(
        &mut self,
        rows: impl IntoIterator<Item = &'a SparseVec>,
    ) {
        let mut order: Vec<&SparseVec> = rows.into_iter().collect();
        order.sort_by_key(|r| r.len());
        for row in order {
            self.insert(row);
        }
    }

    /// Full back elimination. Returns (rows, pivots) with rows ordered
    /// by increasing pivot column, each pivot column appearing in no
    /// other row: the unique RREF of the inserted row space.
    pub fn into_rref(mut self) -> (Vec<SparseVec>, Vec<u32>) {
        let field = self.field;
        // Descending pivot order: every pivot row used for elimination
        // is already fully reduced, so one pass per row suffices.
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&r| Reverse(self.pivots[r]));
        for r in order {
            let tail: SparseVec = self.rows[r].drain(1..).collect();
            if tail.iter().all(|&(c, _)| self.pivot_row[c as usize] == NO_ROW) {
                self.rows[r].extend(tail);
                continue;
            }
            let mut heap: BinaryHeap<Reverse<u32>> = BinaryHeap::new();
            for &(c, v) in &tail {
                if self.buf[c as usize] == 0 {
                    heap.push(Reverse(c));
                }
                self.buf[c as usize] = field.add(self.buf[c as usize], v);
            }
            let mut clean: SparseVec = Vec::with_capacity(tail.len());
            while let Some(Reverse(c)) = heap.pop() {
                let v = self.buf[c as usize];
                if v == 0 {
                    continue;
                }
                self.buf[c as usize] = 0;
                let pr = self.pivot_row[c as usize];
                if pr == NO_ROW {
                    clean.push((c, v));
                } else {
                    for &(c2, w) in &self.rows[pr as usize][1..] {
                        let old = self.buf[c2 as usize];
                        let new = field.sub(old, field.mul(v, w));
                        if old == 0 && new != 0 {
                            heap.push(Reverse(c2));
                        }
                        self.buf[c2 as usize] = new;
                    }
                }
            }
            self.rows[r].extend(clean);
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&r| self.pivots[r]);
        let mut rows = Vec::with_capacity(order.len());
        let mut pivots = Vec::with_capacity(order.len());
        for r in order {
            rows.push(std::mem::take(&mut self.rows[r]));
            pivots.push(self.pivots[r]);
        }
        (rows, pivots)
    }
}

/// RREF of the row space of `rows` inside GF(p)^cols.
pub fn rref(field: PrimeField, cols: usize, rows: &[SparseVec]) -> (Vec<SparseVec>, Vec<u32>) {
    let mut ech = Echelon::new(field, cols);
    ech.insert_all_sparsest_first(rows.iter());
    ech.into_rref()
}

/// Basis of the right kernel {x : Ax = 0}, one vector per free column
/// of the RREF, ordered by free column. This is the canonical basis in
/// which the free-column coordinates form an identity block.
pub fn kernel_basis(field: PrimeField, matrix: &FieldMatrix) -> Vec<SparseVec> {
    let (rows, pivots) = rref(field, matrix.cols, &matrix.data);
    let mut is_pivot = vec![false; matrix.cols];
    for &p in &pivots {
        is_pivot[p as usize] = true;
    }
    // In RREF every tail entry sits at a free column, so one sweep
    // distributes the coefficients to their kernel vectors.
    let mut buckets: Vec<SparseVec> = vec![Vec::new(); matrix.cols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, a) in &row[1..] {
            buckets[c as usize].push((pivots[r], field.neg(a)));
        }
    }
    let mut basis = Vec::with_capacity(matrix.cols - pivots.len());
    for f in 0..matrix.cols {
        if is_pivot[f] {
            continue;
        }
        let mut v = std::mem::take(&mut buckets[f]);
        v.push((f as u32, 1));
        v.sort_unstable_by_key(|e| e.0);
        basis.push(v);
    }
    basis
}

/// Rank of a small dense matrix, used for parameter checks where rows
/// are short and dense anyway.
pub fn dense_rank(field: PrimeField, mut m: Vec<Vec<u64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
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
                for cc in c..cols {
                    let s = field.mul(f, m[rank][cc]);
                    m[r][cc] = field.sub(m[r][cc], s);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn pairs_merge_and_drop_zeros() {
        let f = f7();
        let v = sparse_from_pairs(f, vec![(3, 4), (1, 2), (3, 3), (0, 5), (0, 2)]);
        assert_eq!(v, vec![(1, 2)]);
    }

    #[test]
    fn rref_known_matrix() {
        let f = f7();
        let m = FieldMatrix::from_rows(
            3,
            vec![vec![(0, 1), (1, 1)], vec![(1, 1), (2, 1)], vec![(0, 1), (2, 6)]],
        );
        assert_eq!(m.rank(f), 2);
        let (rows, pivots) = rref(f, 3, &m.data);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows[0], vec![(0, 1), (2, 6)]);
        assert_eq!(rows[1], vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn rref_insertion_order_invariant() {
        let f = f7();
        let rows = vec![
            vec![(0, 2), (2, 3), (4, 1)],
            vec![(1, 1), (2, 5)],
            vec![(0, 1), (1, 4), (4, 4)],
            vec![(3, 6)],
        ];
        let reference = rref(f, 5, &rows);
        let mut perm = rows.clone();
        perm.reverse();
        assert_eq!(rref(f, 5, &perm), reference);
        let perm2 = vec![rows[2].clone(), rows[0].clone(), rows[3].clone(), rows[1].clone()];
        assert_eq!(rref(f, 5, &perm2), reference);
    }

    #[test]
    fn kernel_of_two_by_three() {
        let f = f7();
        let m = FieldMatrix::from_rows(3, vec![vec![(0, 1), (1, 1)], vec![(1, 1), (2, 1)]]);
        let basis = kernel_basis(f, &m);
        assert_eq!(basis, vec![vec![(0, 1), (1, 6), (2, 1)]]);
        for v in &basis {
            let dense = sparse_to_dense(v, 3);
            assert!(m.mul_dense(f, &dense).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn kernel_of_zero_and_full_rank() {
        let f = f7();
        let z = FieldMatrix::zero(2, 3);
        assert_eq!(kernel_basis(f, &z).len(), 3);
        let id = FieldMatrix::from_rows(2, vec![vec![(0, 1)], vec![(1, 1)]]);
        assert!(kernel_basis(f, &id).is_empty());
    }

    #[test]
    fn transpose_involution_and_rank() {
        let f = f7();
        let m = FieldMatrix::from_rows(
            4,
            vec![vec![(0, 3), (3, 2)], vec![], vec![(1, 1), (2, 1), (3, 1)]],
        );
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.rank(f), m.transpose().rank(f));
    }

    #[test]
    fn zero_columns_matrix() {
        let f = f7();
        let m = FieldMatrix::zero(3, 0);
        assert_eq!(m.rank(f), 0);
        assert!(kernel_basis(f, &m).is_empty());
    }

    #[test]
    fn dense_rank_matches() {
        let f = f7();
        let m = vec![vec![0, 2, 1], vec![1, 1, 1], vec![1, 3, 2]];
        assert_eq!(dense_rank(f, m), 2);
        assert_eq!(dense_rank(f, vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(dense_rank(f, Vec::new()), 0);
    }
}
