//! Graded pieces of the face ring.
//!
//! The face ring of a complex is the polynomial ring on its vertices
//! modulo the squarefree monomials supported outside it. A monomial
//! basis of each graded piece survives the quotient: monomials whose
//! support is a face. Pieces are materialized on demand and kept in
//! degree order, giving every degree a fixed coordinate system that
//! the linear algebra modules rely on.

use std::collections::HashMap;

use crate::complex::{binom, Face, SimplicialComplex};
use crate::field::PrimeField;
use crate::matrix::{FieldMatrix, SparseVec};

/// Monomial as sorted (vertex, exponent) pairs with positive
/// exponents. The empty vector is the unit monomial.
pub type Monomial = Vec<(u32, u32)>;

pub fn monomial_degree(m: &Monomial) -> u32 {
    m.iter().map(|&(_, e)| e).sum()
}

pub fn monomial_support(m: &Monomial) -> Face {
    Face::new(m.iter().map(|&(v, _)| v).collect())
}

fn times_vertex(m: &Monomial, v: u32) -> Monomial {
    let mut out = m.clone();
    match out.binary_search_by_key(&v, |e| e.0) {
        Ok(i) => out[i].1 += 1,
        Err(i) => out.insert(i, (v, 1)),
    }
    out
}

pub struct GradedRing {
    complex: SimplicialComplex,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl GradedRing {
    pub fn new(complex: SimplicialComplex) -> Self {
        assert!(!complex.is_void(), "the void complex has no face ring");
        GradedRing {
            complex,
            bases: Vec::new(),
            index: Vec::new(),
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    fn ensure_degree(&mut self, i: usize) {
        while self.bases.len() <= i {
            let deg = self.bases.len();
            let mut basis: Vec<Monomial> = Vec::new();
            if deg == 0 {
                basis.push(Vec::new());
            } else {
                for s in 1..=deg.min(self.complex.f_vector().len() - 1) {
                    for face in self.complex.faces_with_size(s) {
                        push_compositions(face.vertices(), deg as u32, &mut basis);
                    }
                }
                basis.sort();
            }
            let index = basis
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect();
            self.bases.push(basis);
            self.index.push(index);
        }
    }

    /// Monomial basis of the degree-i piece, sorted.
    pub fn basis(&mut self, i: usize) -> &[Monomial] {
        self.ensure_degree(i);
        &self.bases[i]
    }

    pub fn dim(&mut self, i: usize) -> usize {
        self.basis(i).len()
    }

    pub fn index_of(&mut self, i: usize, m: &Monomial) -> Option<usize> {
        self.ensure_degree(i);
        self.index[i].get(m).copied()
    }

    /// Dimension of the degree-i piece by counting compositions over
    /// faces, without materializing the basis.
    pub fn hilbert_function(&self, i: usize) -> i64 {
        if i == 0 {
            return 1;
        }
        let f = self.complex.f_vector();
        (1..f.len())
            .map(|s| f[s] * binom(i as i64 - 1, s as i64 - 1))
            .sum()
    }

    /// Matrix of multiplication by a linear form from degree i to
    /// degree i+1, in the monomial bases (standard orientation: rows
    /// index the target).
    pub fn mult_matrix(&mut self, field: PrimeField, theta: &[u64], i: usize) -> FieldMatrix {
        assert_eq!(theta.len(), self.complex.n_vertices());
        self.ensure_degree(i + 1);
        let cols = self.bases[i].len();
        let rows = self.bases[i + 1].len();
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        for (col, m) in self.bases[i].iter().enumerate() {
            for (v, &coeff) in theta.iter().enumerate() {
                let coeff = coeff % field.modulus();
                if coeff == 0 {
                    continue;
                }
                let prod = times_vertex(m, v as u32);
                if !self.complex.has_face(&monomial_support(&prod)) {
                    continue;
                }
                let row = self.index[i + 1][&prod];
                data[row].push((col as u32, coeff));
            }
        }
        for row in &mut data {
            row.sort_unstable_by_key(|e| e.0);
        }
        FieldMatrix::from_rows(cols, data)
    }
}

/// All monomials of total degree `total` supported on exactly
/// `verts`: every vertex gets a positive exponent.
fn push_compositions(verts: &[u32], total: u32, out: &mut Vec<Monomial>) {
    let s = verts.len() as u32;
    if total < s {
        return;
    }
    let mut current: Monomial = Vec::with_capacity(verts.len());
    fn rec(verts: &[u32], remaining: u32, current: &mut Monomial, out: &mut Vec<Monomial>) {
        if verts.len() == 1 {
            let mut m = current.clone();
            m.push((verts[0], remaining));
            out.push(m);
            return;
        }
        // Leave at least one for each remaining vertex.
        let spare = verts.len() as u32 - 1;
        for e in 1..=remaining - spare {
            current.push((verts[0], e));
            rec(&verts[1..], remaining - e, current, out);
            current.pop();
        }
    }
    rec(verts, total, &mut current, out);
}
