//! Simplicial cohomology over GF(p), in reduced, unreduced and
//! relative flavors.
//!
//! A [`CochainComplex`] is built from a complex plus a keep predicate
//! selecting which faces carry cochains. Keeping every face gives the
//! reduced theory (the empty face sits in degree -1); keeping faces
//! that contain a fixed face F gives the relative theory of the pair
//! (complex, faces not containing F); keeping the complement of a
//! subcomplex gives general relative pairs. All three work because the
//! kept set is closed upward: the coboundary of a supported cochain is
//! again supported.
//!
//! The coboundary follows the usual alternating sign on the position
//! of the added vertex, and cohomology dimensions come from ranks of
//! the coboundary matrices. Over a field this matches simplicial
//! homology of the same pair (dimensions are all we use).

use crate::complex::{sign, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::{kernel_basis, FieldMatrix, SparseVec};
use crate::subspace::Subspace;

pub struct CochainComplex {
    field: PrimeField,
    /// Kept faces grouped by vertex count, each bucket sorted.
    sizes: Vec<Vec<Face>>,
    /// deltas[s] maps cochains on size-s faces to size-(s+1) faces.
    deltas: Vec<FieldMatrix>,
    ranks: Vec<usize>,
}

impl CochainComplex {
    pub fn with_keep(
        field: PrimeField,
        complex: &SimplicialComplex,
        keep: impl Fn(&Face) -> bool,
    ) -> Self {
        let top = complex.f_vector().len();
        let mut sizes: Vec<Vec<Face>> = Vec::with_capacity(top);
        for s in 0..top {
            sizes.push(
                complex
                    .faces_with_size(s)
                    .iter()
                    .filter(|f| keep(f))
                    .cloned()
                    .collect(),
            );
        }
        while sizes.last().is_some_and(|b| b.is_empty()) {
            sizes.pop();
        }
        let mut deltas = Vec::with_capacity(sizes.len());
        for s in 0..sizes.len() {
            let source = &sizes[s];
            let target: &[Face] = sizes.get(s + 1).map_or(&[], |v| v.as_slice());
            let mut data: Vec<SparseVec> = Vec::with_capacity(target.len());
            for g in target {
                let mut row: SparseVec = Vec::new();
                for (pos, &v) in g.vertices().iter().enumerate() {
                    let sub = g.without_vertex(v);
                    if let Ok(col) = source.binary_search(&sub) {
                        let coeff = field.reduce_i64(sign(pos as i64));
                        if coeff != 0 {
                            row.push((col as u32, coeff));
                        }
                    }
                }
                row.sort_unstable_by_key(|e| e.0);
                data.push(row);
            }
            deltas.push(FieldMatrix::from_rows(source.len(), data));
        }
        let ranks = deltas.iter().map(|d| d.rank(field)).collect();
        CochainComplex {
            field,
            sizes,
            deltas,
            ranks,
        }
    }

    /// Reduced cochain complex: every face kept, the empty face in
    /// degree -1.
    pub fn reduced(field: PrimeField, complex: &SimplicialComplex) -> Self {
        Self::with_keep(field, complex, |_| true)
    }

    /// Unreduced: the empty face dropped, so degree 0 sees the
    /// component count.
    pub fn unreduced(field: PrimeField, complex: &SimplicialComplex) -> Self {
        Self::with_keep(field, complex, |f| !f.is_empty())
    }

    /// Relative cochains of the pair (complex, faces not containing
    /// `f`): exactly the cochains supported on faces containing `f`.
    /// For the empty face this degenerates to the reduced complex.
    pub fn pair_contrastar(
        field: PrimeField,
        complex: &SimplicialComplex,
        f: &Face,
    ) -> Result<Self> {
        if !complex.has_face(f) {
            return Err(Error::FaceNotInComplex(complex.face_label(f)));
        }
        Ok(Self::with_keep(field, complex, |g| f.is_subset_of(g)))
    }

    /// Relative cochains of the pair (complex, sub), matching faces by
    /// vertex names.
    pub fn pair_subcomplex(
        field: PrimeField,
        complex: &SimplicialComplex,
        sub: &SimplicialComplex,
    ) -> Result<Self> {
        if !complex.contains_complex(sub) {
            return Err(Error::NotSubcomplex(
                "relative pair requires the second complex inside the first".into(),
            ));
        }
        // Translate sub's faces into this complex's vertex ids once.
        let mut in_sub: std::collections::HashSet<Face> = std::collections::HashSet::new();
        for f in sub.all_faces() {
            let names: Vec<&str> = f.vertices().iter().map(|&v| sub.vertex_name(v)).collect();
            let translated = complex
                .face_from_names(&names)
                .expect("checked subcomplex face");
            in_sub.insert(translated);
        }
        Ok(Self::with_keep(field, complex, |g| !in_sub.contains(g)))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    fn bucket(&self, k: i32) -> Option<usize> {
        let s = k + 1;
        (s >= 0 && (s as usize) < self.sizes.len()).then_some(s as usize)
    }

    /// Kept faces carrying degree-k cochains, sorted.
    pub fn face_basis(&self, k: i32) -> &[Face] {
        self.bucket(k)
            .map_or(&[], |s| self.sizes[s].as_slice())
    }

    pub fn dim_cochains(&self, k: i32) -> usize {
        self.face_basis(k).len()
    }

    pub fn index_in_degree(&self, k: i32, f: &Face) -> Option<usize> {
        self.bucket(k)
            .and_then(|s| self.sizes[s].binary_search(f).ok())
    }

    /// Coboundary out of degree k. The zero-size matrix when k is out
    /// of range.
    pub fn delta(&self, k: i32) -> FieldMatrix {
        match self.bucket(k) {
            Some(s) => self.deltas[s].clone(),
            None => FieldMatrix::zero(0, self.dim_cochains(k)),
        }
    }

    fn rank_out(&self, k: i32) -> usize {
        self.bucket(k).map_or(0, |s| self.ranks[s])
    }

    /// dim H^k of this cochain complex.
    pub fn betti(&self, k: i32) -> usize {
        if self.bucket(k).is_none() {
            return 0;
        }
        self.dim_cochains(k) - self.rank_out(k) - self.rank_out(k - 1)
    }

    /// Smallest and largest degree carrying cochains, when any exist.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let lo = self.sizes.iter().position(|b| !b.is_empty())? as i32 - 1;
        Some((lo, self.sizes.len() as i32 - 2))
    }

    /// Kernel of the coboundary in degree k, as a subspace of the
    /// degree-k cochains.
    pub fn cocycles(&self, k: i32) -> Subspace {
        let n = self.dim_cochains(k);
        match self.bucket(k) {
            None => Subspace::zero(n),
            Some(s) if s + 1 >= self.sizes.len() => Subspace::full(n),
            Some(s) => {
                let ker = kernel_basis(self.field, &self.deltas[s]);
                Subspace::from_rows(self.field, n, &ker)
            }
        }
    }

    /// Image of the coboundary landing in degree k.
    pub fn coboundaries(&self, k: i32) -> Subspace {
        let n = self.dim_cochains(k);
        match self.bucket(k - 1) {
            None => Subspace::zero(n),
            Some(s) => Subspace::from_rows(self.field, n, &self.deltas[s].transpose().data),
        }
    }

    pub fn cohomology_basis(&self, k: i32) -> CohomologyBasis {
        let boundaries = self.coboundaries(k);
        let cocycles = self.cocycles(k);
        let residuals: Vec<SparseVec> = cocycles
            .basis()
            .iter()
            .map(|z| boundaries.reduce(self.field, z))
            .filter(|r| !r.is_empty())
            .collect();
        let reps = Subspace::from_rows(self.field, self.dim_cochains(k), &residuals);
        debug_assert_eq!(reps.dim(), self.betti(k));
        CohomologyBasis {
            field: self.field,
            boundaries,
            reps,
        }
    }
}

/// A canonical basis of H^k: representatives obtained by reducing the
/// cocycle space modulo the coboundary space.
pub struct CohomologyBasis {
    field: PrimeField,
    boundaries: Subspace,
    reps: Subspace,
}

impl CohomologyBasis {
    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn representatives(&self) -> &[SparseVec] {
        self.reps.basis()
    }

    /// Coordinates of the class of `z` in this basis. `z` must be a
    /// cocycle of the underlying complex.
    pub fn class_coords(&self, z: &[(u32, u64)]) -> SparseVec {
        let residual = self.boundaries.reduce(self.field, z);
        self.reps
            .express(self.field, &residual)
            .expect("class of a non-cocycle requested")
    }
}

pub fn reduced_betti(field: PrimeField, complex: &SimplicialComplex, k: i32) -> usize {
    CochainComplex::reduced(field, complex).betti(k)
}

/// All reduced Betti numbers from degree -1 through the dimension.
pub fn reduced_betti_profile(field: PrimeField, complex: &SimplicialComplex) -> Vec<(i32, usize)> {
    let cc = CochainComplex::reduced(field, complex);
    match complex.dim() {
        None => Vec::new(),
        Some(d) => (-1..=d).map(|k| (k, cc.betti(k))).collect(),
    }
}

pub fn unreduced_betti(field: PrimeField, complex: &SimplicialComplex, k: i32) -> usize {
    CochainComplex::unreduced(field, complex).betti(k)
}

/// dim H^k of the pair (complex, faces not containing f).
pub fn contrastar_betti(
    field: PrimeField,
    complex: &SimplicialComplex,
    f: &Face,
    k: i32,
) -> Result<usize> {
    Ok(CochainComplex::pair_contrastar(field, complex, f)?.betti(k))
}

/// Partial alternating sum of reduced Betti numbers through degree i,
/// signed so that degree -1 contributes negatively. Zero for i < -1.
pub fn truncated_euler(field: PrimeField, complex: &SimplicialComplex, i: i32) -> i64 {
    if i < -1 || complex.is_void() {
        return 0;
    }
    let cc = CochainComplex::reduced(field, complex);
    let top = complex.dim().unwrap();
    (-1..=i.min(top))
        .map(|j| sign(j as i64) * cc.betti(j) as i64)
        .sum()
}

/// Full alternating sum of reduced Betti numbers; must equal the
/// combinatorial reduced Euler characteristic over every field.
pub fn euler_from_betti(field: PrimeField, complex: &SimplicialComplex) -> i64 {
    match complex.dim() {
        None => 0,
        Some(d) => truncated_euler(field, complex, d),
    }
}

/// Vanishing of the relative cohomology of every vertex-or-larger pair
/// below the top degree. Purity plus this condition is the standard
/// field criterion; the empty face is exempt.
pub fn is_buchsbaum(field: PrimeField, complex: &SimplicialComplex) -> bool {
    vanishing_below_top(field, complex, false)
}

/// Same vanishing including the empty face, i.e. reduced cohomology of
/// the complex itself is allowed only at the top.
pub fn is_cohen_macaulay(field: PrimeField, complex: &SimplicialComplex) -> bool {
    vanishing_below_top(field, complex, true)
}

fn vanishing_below_top(field: PrimeField, complex: &SimplicialComplex, include_empty: bool) -> bool {
    if complex.is_void() {
        return true;
    }
    if !complex.is_pure() {
        return false;
    }
    let d = complex.ring_dim().unwrap() as i32;
    for f in complex.all_faces() {
        if f.is_empty() && !include_empty {
            continue;
        }
        let pair = CochainComplex::pair_contrastar(field, complex, f).unwrap();
        for i in -1..d - 1 {
            if pair.betti(i) != 0 {
                return false;
            }
        }
    }
    true
}

/// For every face F and degree m, compares dim H^m of the pair with
/// the reduced Betti number of the link of F shifted by |F|. Returns
/// the mismatches; the theory says there are none.
pub fn link_pair_mismatches(
    field: PrimeField,
    complex: &SimplicialComplex,
) -> Vec<(Face, i32, usize, usize)> {
    let mut out = Vec::new();
    let Some(d) = complex.dim() else {
        return out;
    };
    for f in complex.all_faces() {
        let pair = CochainComplex::pair_contrastar(field, complex, f).unwrap();
        let link = complex.link(f).unwrap();
        let link_cc = CochainComplex::reduced(field, &link);
        for m in -1..=d {
            let lhs = pair.betti(m);
            let rhs = link_cc.betti(m - f.len() as i32);
            if lhs != rhs {
                out.push((f.clone(), m, lhs, rhs));
            }
        }
    }
    out
}
