//! The sparse elimination engine checked against a dense textbook
//! implementation, plus the subspace lattice laws it must satisfy.

mod support;

use hvec_core::field::PrimeField;
use hvec_core::matrix::{
    kernel_basis, rref, sparse_from_dense, sparse_to_dense, FieldMatrix, SparseVec,
};
use hvec_core::subspace::{matrix_columns, Subspace};
use proptest::prelude::*;

fn arb_prime() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3), Just(7), Just(101), Just(2_147_483_647)]
}

/// Sparse-ish dense matrix with entries in GF(p), about half zero.
fn arb_matrix(p: u64, max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(
            proptest::collection::vec(
                prop_oneof![3 => Just(0u64), 2 => (0..p)],
                c,
            ),
            r,
        )
    })
}

fn sparse_rows(m: &[Vec<u64>]) -> Vec<SparseVec> {
    m.iter().map(|r| sparse_from_dense(r)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rref_matches_dense_oracle(p in arb_prime(), m in arb_matrix(101, 9, 9)) {
        // Entries are drawn in 0..101 and reduced mod p, so every prime
        // sees the same support patterns.
        let field = PrimeField::new(p).unwrap();
        let m: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
        let cols = m[0].len();
        let (sparse, piv_s) = rref(field, cols, &sparse_rows(&m));
        let (dense, piv_d) = support::dense_rref(field, m);
        prop_assert_eq!(&piv_s, &piv_d);
        prop_assert_eq!(support::to_dense_rows(&sparse, cols), dense);
    }

    #[test]
    fn rank_nullity_and_kernel_exactness(p in arb_prime(), m in arb_matrix(101, 10, 10)) {
        let field = PrimeField::new(p).unwrap();
        let m: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
        let cols = m[0].len();
        let mat = FieldMatrix::from_rows(cols, sparse_rows(&m));
        let rank = mat.rank(field);
        let kernel = kernel_basis(field, &mat);
        prop_assert_eq!(rank + kernel.len(), cols);
        for v in &kernel {
            let dense = sparse_to_dense(v, cols);
            prop_assert!(mat.mul_dense(field, &dense).iter().all(|&x| x == 0));
        }
        // The kernel basis really is independent.
        let kmat = FieldMatrix::from_rows(cols, kernel.clone());
        prop_assert_eq!(kmat.rank(field), kernel.len());
        // Row rank equals column rank.
        prop_assert_eq!(mat.transpose().rank(field), rank);
    }

    #[test]
    fn rref_ignores_insertion_order(p in arb_prime(), m in arb_matrix(101, 8, 8), seed in any::<u64>()) {
        let field = PrimeField::new(p).unwrap();
        let m: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
        let cols = m[0].len();
        let rows = sparse_rows(&m);
        let reference = rref(field, cols, &rows);
        let mut shuffled = rows.clone();
        // Cheap deterministic shuffle.
        let mut s = seed;
        for i in (1..shuffled.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(rref(field, cols, &shuffled), reference);
    }

    #[test]
    fn subspace_dimension_formula(p in arb_prime(), a in arb_matrix(101, 6, 8), b in arb_matrix(101, 6, 8)) {
        let field = PrimeField::new(p).unwrap();
        let cols = a[0].len().max(b[0].len());
        let pad = |m: &[Vec<u64>]| -> Vec<SparseVec> {
            m.iter()
                .map(|r| {
                    let mut r: Vec<u64> = r.iter().map(|&x| x % p).collect();
                    r.resize(cols, 0);
                    sparse_from_dense(&r)
                })
                .collect()
        };
        let u = Subspace::from_rows(field, cols, &pad(&a));
        let w = Subspace::from_rows(field, cols, &pad(&b));
        let s = u.sum(field, &w);
        let i = u.intersect(field, &w);
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(u.contains_subspace(field, &i));
        prop_assert!(w.contains_subspace(field, &i));
        prop_assert!(s.contains_subspace(field, &u));
        prop_assert!(s.contains_subspace(field, &w));
        // Intersection is the largest subspace inside both: every basis
        // vector of u that happens to lie in w must be in it.
        for v in u.basis() {
            if w.contains(field, v) {
                prop_assert!(i.contains(field, v));
            }
        }
    }

    #[test]
    fn modular_law(p in arb_prime(), a in arb_matrix(7, 4, 7), b in arb_matrix(7, 4, 7), c in arb_matrix(7, 4, 7)) {
        let field = PrimeField::new(p).unwrap();
        let cols = 7;
        let pad = |m: &[Vec<u64>]| -> Vec<SparseVec> {
            m.iter()
                .map(|r| {
                    let mut r: Vec<u64> = r.iter().map(|&x| x % p).collect();
                    r.resize(cols, 0);
                    sparse_from_dense(&r)
                })
                .collect()
        };
        let u = Subspace::from_rows(field, cols, &pad(&a));
        let v = Subspace::from_rows(field, cols, &pad(&b));
        // Force u <= w by summing in the extra generators.
        let w = u.sum(field, &Subspace::from_rows(field, cols, &pad(&c)));
        let lhs = u.sum(field, &v.intersect(field, &w));
        let rhs = u.sum(field, &v).intersect(field, &w);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn preimage_dimension_and_membership(p in arb_prime(), m in arb_matrix(101, 7, 7), wgen in arb_matrix(101, 4, 7)) {
        let field = PrimeField::new(p).unwrap();
        let reduce = |m: &[Vec<u64>]| -> Vec<Vec<u64>> {
            m.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect()
        };
        let m = reduce(&m);
        let target_dim = m.len();
        let domain_dim = m[0].len();
        let mat = FieldMatrix::from_rows(domain_dim, sparse_rows(&m));
        let images = matrix_columns(&mat);
        let wrows: Vec<SparseVec> = reduce(&wgen)
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.resize(target_dim, 0);
                sparse_from_dense(&r)
            })
            .collect();
        let w = Subspace::from_rows(field, target_dim, &wrows);
        let pre = w.preimage(field, domain_dim, &images);
        // Every preimage basis vector lands in w.
        for x in pre.basis() {
            let dense = sparse_to_dense(x, domain_dim);
            let y = mat.mul_dense(field, &dense);
            prop_assert!(w.contains(field, &sparse_from_dense(&y)));
        }
        // dim = nullity + dim(image meet w). The column space of the
        // map is the row space of the transpose.
        let image = Subspace::from_rows(field, target_dim, &mat.transpose().data);
        let nullity = domain_dim - mat.rank(field);
        prop_assert_eq!(pre.dim(), nullity + image.intersect(field, &w).dim());
    }

    #[test]
    fn express_reconstructs(p in arb_prime(), a in arb_matrix(101, 5, 6), coeffs in proptest::collection::vec(0u64..101, 5)) {
        let field = PrimeField::new(p).unwrap();
        let cols = 6;
        let rows: Vec<SparseVec> = a
            .iter()
            .map(|r| {
                let mut r: Vec<u64> = r.iter().map(|&x| x % p).collect();
                r.resize(cols, 0);
                sparse_from_dense(&r)
            })
            .collect();
        let u = Subspace::from_rows(field, cols, &rows);
        // Random combination of the basis lies in u and reconstructs.
        let mut dense = vec![0u64; cols];
        for (r, row) in u.basis().iter().enumerate() {
            let c = coeffs.get(r).copied().unwrap_or(0) % p;
            for &(col, v) in row {
                dense[col as usize] = field.add(dense[col as usize], field.mul(c, v));
            }
        }
        let v = sparse_from_dense(&dense);
        let expressed = u.express(field, &v).unwrap();
        let mut rebuilt = vec![0u64; cols];
        for &(r, c) in &expressed {
            for &(col, x) in &u.basis()[r as usize] {
                rebuilt[col as usize] = field.add(rebuilt[col as usize], field.mul(c, x));
            }
        }
        prop_assert_eq!(sparse_from_dense(&rebuilt), v);
    }
}
