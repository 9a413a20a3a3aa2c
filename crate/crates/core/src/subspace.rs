//! Canonical subspaces of GF(p)^n.
//!
//! A subspace is stored as the RREF basis of its row space, so two
//! subspaces are equal iff their stored data is equal. All the lattice
//! operations needed elsewhere live here: sum, intersection, and
//! preimage of a subspace under a linear map, plus coordinates in the
//! quotient by the subspace (taken in the basis of standard vectors at
//! the non-pivot columns).

use crate::field::PrimeField;
use crate::matrix::{kernel_basis, sparse_from_pairs, Echelon, FieldMatrix, SparseVec};
use std::cmp::Reverse;
use std::collections::BinaryHeap;

const NO_ROW: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<u32>,
    pivot_row: Vec<u32>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![NO_ROW; ambient],
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient).map(|c| vec![(c as u32, 1)]).collect();
        let pivots: Vec<u32> = (0..ambient as u32).collect();
        let pivot_row = (0..ambient as u32).collect();
        Subspace {
            ambient,
            rows,
            pivots,
            pivot_row,
        }
    }

    pub fn from_rows(field: PrimeField, ambient: usize, rows: &[SparseVec]) -> Self {
        let mut ech = Echelon::new(field, ambient);
        ech.insert_all_sparsest_first(rows.iter());
        let (rows, pivots) = ech.into_rref();
        let mut pivot_row = vec![NO_ROW; ambient];
        for (r, &p) in pivots.iter().enumerate() {
            pivot_row[p as usize] = r as u32;
        }
        Subspace {
            ambient,
            rows,
            pivots,
            pivot_row,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    /// Residual of `v` after eliminating all pivot columns; zero iff
    /// `v` lies in the subspace. Supported only on non-pivot columns.
    pub fn reduce(&self, field: PrimeField, v: &[(u32, u64)]) -> SparseVec {
        self.reduce_recording(field, v).0
    }

    pub fn contains(&self, field: PrimeField, v: &[(u32, u64)]) -> bool {
        self.reduce(field, v).is_empty()
    }

    pub fn contains_subspace(&self, field: PrimeField, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(field, r))
    }

    /// Coefficients of `v` in the stored RREF basis, or None if `v`
    /// is outside the subspace.
    pub fn express(&self, field: PrimeField, v: &[(u32, u64)]) -> Option<SparseVec> {
        let (residual, coeffs) = self.reduce_recording(field, v);
        residual.is_empty().then_some(coeffs)
    }

    /// Coordinates of the class of `v` in ambient/self, in the basis
    /// given by the standard vectors at non-pivot columns.
    pub fn quotient_coords(&self, field: PrimeField, v: &[(u32, u64)]) -> SparseVec {
        self.reduce(field, v)
            .into_iter()
            .map(|(c, x)| (self.free_index(c), x))
            .collect()
    }

    fn free_index(&self, c: u32) -> u32 {
        c - self.pivots.partition_point(|&p| p < c) as u32
    }

    /// One pass of scatter elimination against the RREF rows. RREF
    /// tails live on free columns, so no cascade: each pivot column of
    /// `v` is eliminated exactly once. Returns (residual, coefficients
    /// by row index).
    fn reduce_recording(&self, field: PrimeField, v: &[(u32, u64)]) -> (SparseVec, SparseVec) {
        let mut buf = vec![0u64; self.ambient];
        let mut heap: BinaryHeap<Reverse<u32>> = BinaryHeap::with_capacity(v.len());
        for &(c, x) in v {
            debug_assert!((c as usize) < self.ambient);
            if buf[c as usize] == 0 && x != 0 {
                heap.push(Reverse(c));
            }
            buf[c as usize] = field.add(buf[c as usize], x % field.modulus());
        }
        let mut residual: SparseVec = Vec::new();
        let mut coeffs: SparseVec = Vec::new();
        while let Some(Reverse(c)) = heap.pop() {
            let x = buf[c as usize];
            if x == 0 {
                continue;
            }
            buf[c as usize] = 0;
            let r = self.pivot_row[c as usize];
            if r == NO_ROW {
                residual.push((c, x));
            } else {
                coeffs.push((r, x));
                for &(c2, w) in &self.rows[r as usize][1..] {
                    let old = buf[c2 as usize];
                    let new = field.sub(old, field.mul(x, w));
                    if old == 0 && new != 0 {
                        heap.push(Reverse(c2));
                    }
                    buf[c2 as usize] = new;
                }
            }
        }
        coeffs.sort_unstable_by_key(|e| e.0);
        (residual, coeffs)
    }

    pub fn sum(&self, field: PrimeField, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace::from_rows(field, self.ambient, &rows)
    }

    /// Zassenhaus-style intersection: a vector is in both row spaces
    /// iff it is a U-combination and a W-combination simultaneously,
    /// which is a kernel condition on the stacked coefficient space.
    pub fn intersect(&self, field: PrimeField, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let k = self.dim();
        let mut stacked = self.rows.clone();
        for row in &other.rows {
            stacked.push(row.iter().map(|&(c, v)| (c, field.neg(v))).collect());
        }
        let m = FieldMatrix::from_rows(self.ambient, stacked);
        // Left kernel of the stack = right kernel of its transpose.
        let coeffs = kernel_basis(field, &m.transpose());
        let vectors: Vec<SparseVec> = coeffs
            .iter()
            .map(|kv| {
                let pairs = kv
                    .iter()
                    .take_while(|&&(r, _)| (r as usize) < k)
                    .flat_map(|&(r, a)| {
                        self.rows[r as usize]
                            .iter()
                            .map(move |&(c, v)| (c, field.mul(a, v)))
                    });
                sparse_from_pairs(field, pairs)
            })
            .collect();
        Subspace::from_rows(field, self.ambient, &vectors)
    }

    /// {x : f(x) in self}, where f is given by the images of the
    /// domain's standard basis vectors inside this ambient space.
    pub fn preimage(&self, field: PrimeField, domain_dim: usize, images: &[SparseVec]) -> Subspace {
        assert_eq!(images.len(), domain_dim);
        let rows: Vec<SparseVec> = images
            .iter()
            .map(|v| self.quotient_coords(field, v))
            .collect();
        let m = FieldMatrix::from_rows(self.codim(), rows);
        let kernel = kernel_basis(field, &m.transpose());
        Subspace::from_rows(field, domain_dim, &kernel)
    }
}

/// Images of the domain standard basis under a matrix in standard
/// orientation (y = Mx): the matrix columns.
pub fn matrix_columns(m: &FieldMatrix) -> Vec<SparseVec> {
    m.transpose().data
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn canonical_across_generating_sets() {
        let f = f7();
        let a = Subspace::from_rows(
            f,
            4,
            &[vec![(0, 1), (1, 1)], vec![(1, 2), (2, 5)], vec![(0, 1), (1, 3), (2, 5)]],
        );
        let b = Subspace::from_rows(
            f,
            4,
            &[vec![(0, 3), (1, 3)], vec![(0, 1), (1, 3), (2, 5)]],
        );
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn membership_and_coordinates() {
        let f = f7();
        let u = Subspace::from_rows(f, 3, &[vec![(0, 1), (1, 1)], vec![(2, 1)]]);
        assert!(u.contains(f, &[(0, 3), (1, 3), (2, 6)]));
        assert!(!u.contains(f, &[(0, 1)]));
        let coeffs = u.express(f, &[(0, 3), (1, 3), (2, 6)]).unwrap();
        assert_eq!(coeffs, vec![(0, 3), (1, 6)]);
        assert!(u.express(f, &[(1, 1)]).is_none());
        // Quotient by u is one dimensional, spanned by the class at
        // the free column 1.
        let q = u.quotient_coords(f, &[(0, 2), (1, 5)]);
        assert_eq!(q, vec![(0, 3)]);
    }

    #[test]
    fn sum_and_intersection() {
        let f = f7();
        let u = Subspace::from_rows(f, 3, &[vec![(0, 1)], vec![(1, 1)]]);
        let w = Subspace::from_rows(f, 3, &[vec![(1, 1)], vec![(2, 1)]]);
        let s = u.sum(f, &w);
        let i = u.intersect(f, &w);
        assert_eq!(s.dim(), 3);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(f, &[(1, 4)]));
        assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
    }

    #[test]
    fn intersection_skew_lines() {
        let f = f7();
        let u = Subspace::from_rows(f, 3, &[vec![(0, 1), (1, 1)]]);
        let w = Subspace::from_rows(f, 3, &[vec![(1, 1), (2, 1)]]);
        assert!(u.intersect(f, &w).is_zero());
        assert_eq!(u.sum(f, &w).dim(), 2);
    }

    #[test]
    fn preimage_of_plane() {
        let f = f7();
        // f: GF7^3 -> GF7^2 projecting away the last coordinate.
        let images = vec![vec![(0u32, 1u64)], vec![(1, 1)], vec![]];
        let w = Subspace::from_rows(f, 2, &[vec![(0, 1), (1, 1)]]);
        let pre = w.preimage(f, 3, &images);
        assert_eq!(pre.dim(), 2);
        assert!(pre.contains(f, &[(0, 1), (1, 1), (2, 5)]));
        assert!(!pre.contains(f, &[(0, 1)]));
        // Preimage of zero is the kernel.
        let ker = Subspace::zero(2).preimage(f, 3, &images);
        assert_eq!(ker.dim(), 1);
        assert!(ker.contains(f, &[(2, 1)]));
    }

    #[test]
    fn full_and_zero() {
        let f = f7();
        let full = Subspace::full(4);
        assert_eq!(full.dim(), 4);
        assert!(full.contains(f, &[(3, 6)]));
        assert_eq!(full.quotient_coords(f, &[(3, 6)]), vec![]);
        let zero = Subspace::zero(4);
        assert_eq!(zero.quotient_coords(f, &[(3, 6)]), vec![(3, 6)]);
        assert_eq!(Subspace::from_rows(f, 4, &[]), zero);
    }
}
