//! Topological data feeding the h-vector corrections: Hilbert
//! functions of local cohomology read off relative Betti numbers,
//! kernel dimensions of stacked vertex-restriction maps, and the
//! closed-form predictions both sides of the verification compare
//! against.

use crate::cohomology::{
    contrastar_betti, reduced_betti, truncated_euler, unreduced_betti, CochainComplex,
};
use crate::complex::{binom, sign, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::{Echelon, SparseVec};

/// Dimension of the degree -a part of the i-th local cohomology of
/// the face ring, for a >= 0. Degree 0 sees the reduced cohomology of
/// the complex itself; deeper degrees weight each nonempty face by a
/// binomial in a.
pub fn local_cohomology_hilbert(
    field: PrimeField,
    complex: &SimplicialComplex,
    i: i32,
    a: i64,
) -> Result<i64> {
    if a < 0 || complex.is_void() {
        return Ok(0);
    }
    if a == 0 {
        return Ok(reduced_betti(field, complex, i - 1) as i64);
    }
    let mut total = 0i64;
    for f in complex.nonempty_faces() {
        let w = binom(a - 1, f.len() as i64 - 1);
        if w == 0 {
            continue;
        }
        total += w * contrastar_betti(field, complex, f, i - 1)? as i64;
    }
    Ok(total)
}

/// Kernel dimension of the first j restriction maps in cohomological
/// degree i - 1. Each linear form theta_p defines a map out of the
/// direct sum over vertices v of H^{i-1} of the pair (complex, faces
/// missing v), sending the v-summand into reduced H^{i-1} through the
/// cochain inclusion, scaled by the v-coefficient of theta_p. The
/// result is the dimension of the simultaneous kernel of all j maps.
pub fn l_dim(
    field: PrimeField,
    complex: &SimplicialComplex,
    forms: &[Vec<u64>],
    i: i32,
    j: usize,
) -> usize {
    let m = i - 1;
    let cc = CochainComplex::reduced(field, complex);
    let target = cc.cohomology_basis(m);
    let t = target.dim();

    // Columns of the stacked map, one per source class.
    let mut columns: Vec<SparseVec> = Vec::new();
    for v in 0..complex.n_vertices() as u32 {
        let pair = CochainComplex::pair_contrastar(field, complex, &Face::new(vec![v]))
            .expect("vertices are faces");
        let classes = pair.cohomology_basis(m);
        if classes.dim() == 0 {
            continue;
        }
        let faces = pair.face_basis(m);
        for z in classes.representatives() {
            // Extending by zero lands in the absolute cocycles: the
            // kept faces are upward closed, so their cochains form a
            // subcomplex.
            let extended: SparseVec = z
                .iter()
                .map(|&(c, x)| {
                    let abs = cc
                        .index_in_degree(m, &faces[c as usize])
                        .expect("kept face of the ambient complex");
                    (abs as u32, x)
                })
                .collect();
            let coords = target.class_coords(&extended);
            let mut column: SparseVec = Vec::new();
            for p in 0..j {
                let scale = forms[p][v as usize] % field.modulus();
                if scale == 0 {
                    continue;
                }
                for &(r, x) in &coords {
                    column.push(((p * t) as u32 + r, field.mul(scale, x)));
                }
            }
            columns.push(column);
        }
    }

    // Rank is transpose-invariant, so feed the columns to the echelon
    // engine directly.
    let mut ech = Echelon::new(field, j * t);
    for col in &columns {
        ech.insert(col);
    }
    columns.len() - ech.rank()
}

/// Sum over all faces F of binom(d - |F|, col) times the truncated
/// Euler characteristic of the link of F through degree shift - |F|.
/// Every correction term in the closed-form predictions is an
/// instance.
pub fn link_euler_sum(field: PrimeField, complex: &SimplicialComplex, col: i64, shift: i64) -> i64 {
    let Ok(d) = complex.ring_dim() else {
        return 0;
    };
    let d = d as i64;
    let mut total = 0i64;
    for f in complex.all_faces() {
        let w = binom(d - f.len() as i64, col);
        if w == 0 {
            continue;
        }
        let link = complex.link(f).expect("face of the complex");
        total += w * truncated_euler(field, &link, (shift - f.len() as i64) as i32);
    }
    total
}

/// Cohen-Macaulay prediction: the reduction leaves h untouched.
pub fn predict_stanley(complex: &SimplicialComplex, i: usize) -> i64 {
    complex.h_vector()[i]
}

/// Buchsbaum prediction for the artinian reduction: a single global
/// correction weighted by binom(d, i).
pub fn predict_schenzel(field: PrimeField, complex: &SimplicialComplex, i: usize) -> i64 {
    let d = complex.ring_dim().expect("nonvoid complex") as i64;
    let i = i as i64;
    complex.h_vector()[i as usize]
        + sign(i) * binom(d, i) * truncated_euler(field, complex, i as i32 - 2)
}

/// Buchsbaum prediction for the sigma quotient. Below the top degree
/// the truncation index rises by one relative to the artinian case;
/// the top degree equals the top reduced Betti number.
pub fn predict_hsigma_buchsbaum(field: PrimeField, complex: &SimplicialComplex, i: usize) -> i64 {
    let d = complex.ring_dim().expect("nonvoid complex");
    if i == d {
        return reduced_betti(field, complex, d as i32 - 1) as i64;
    }
    let i = i as i64;
    complex.h_vector()[i as usize]
        + sign(i) * binom(d as i64, i) * truncated_euler(field, complex, i as i32 - 1)
}

/// Degree d-1 of the artinian reduction for an arbitrary complex: h
/// plus the stacked kernel dimension plus a link-weighted Euler sum.
/// The forms must be the same system of parameters the algebraic side
/// reduces by.
pub fn predict_h_alg_dminus1(
    field: PrimeField,
    complex: &SimplicialComplex,
    forms: &[Vec<u64>],
) -> i64 {
    let d = complex.ring_dim().expect("nonvoid complex");
    let dd = d as i64;
    complex.h_vector()[d - 1]
        + l_dim(field, complex, forms, d as i32 - 1, d) as i64
        + sign(dd - 1) * link_euler_sum(field, complex, dd - 1, dd - 3)
}

/// Degree d-1 of the sigma quotient for an arbitrary complex: unlike
/// the artinian case no kernel term survives, and the truncation index
/// rises by one.
pub fn predict_h_sigma_dminus1(field: PrimeField, complex: &SimplicialComplex) -> i64 {
    let d = complex.ring_dim().expect("nonvoid complex") as i64;
    complex.h_vector()[d as usize - 1] + sign(d - 1) * link_euler_sum(field, complex, d - 1, d - 2)
}

/// Full artinian reduction of the suspension of a Buchsbaum complex,
/// expressed through the suspension's own h-vector and truncated Euler
/// characteristics.
pub fn predict_suspension(field: PrimeField, suspension: &SimplicialComplex, i: usize) -> i64 {
    let d = suspension.ring_dim().expect("nonvoid complex") as i64;
    let ii = i as i64;
    suspension.h_vector()[i]
        + sign(ii)
            * (binom(d - 2, ii - 2) * truncated_euler(field, suspension, i as i32 - 2)
                - binom(d - 2, ii) * truncated_euler(field, suspension, i as i32 - 1))
}

/// Conjectural Hilbert function of a quotient interpolating between
/// the artinian reduction and the sigma quotient: every degree is
/// corrected by the full link-weighted Euler sum.
pub fn conjecture_h_tau(field: PrimeField, complex: &SimplicialComplex, i: usize) -> i64 {
    let ii = i as i64;
    complex.h_vector()[i] + sign(ii) * link_euler_sum(field, complex, ii, ii - 1)
}

/// Predicted dimension in internal degree j-2 of the kernel of the
/// j-th form acting on the quotient by the first j-1. Four terms: a
/// multiple of a reduced Betti number, two stacked kernel dimensions,
/// and a sum of relative vertex Betti numbers.
pub fn predict_kernel_jminus2(
    field: PrimeField,
    complex: &SimplicialComplex,
    forms: &[Vec<u64>],
    j: usize,
) -> i64 {
    let jj = j as i64;
    let global = (jj - 1) * reduced_betti(field, complex, jj as i32 - 3) as i64;
    let mut vertex_sum = 0i64;
    for v in 0..complex.n_vertices() as u32 {
        vertex_sum +=
            contrastar_betti(field, complex, &Face::new(vec![v]), jj as i32 - 3).unwrap() as i64;
    }
    global + l_dim(field, complex, forms, jj as i32 - 1, j) as i64
        + l_dim(field, complex, forms, jj as i32 - 2, j - 1) as i64
        - vertex_sum
}

/// Both sides of the pure-complex symmetry defect identity, for j in
/// 0..=d: h_{d-j} - h_j against a link-weighted sum of Euler gaps
/// relative to spheres. Entirely combinatorial, so no field enters.
pub fn ds_relation_rows(complex: &SimplicialComplex) -> Result<Vec<(usize, i64, i64)>> {
    if !complex.is_pure() {
        return Err(Error::DimensionMismatch(
            "symmetry defect identity requires a pure complex".into(),
        ));
    }
    let d = complex.ring_dim()?;
    let h = complex.h_vector();
    let mut rows = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let jj = j as i64;
        let lhs = h[d - j] - h[j];
        let mut total = 0i64;
        for f in complex.all_faces() {
            let w = binom((d - f.len()) as i64, jj);
            if w == 0 {
                continue;
            }
            let link = complex.link(f).expect("face of the complex");
            let sphere = sign((d - f.len()) as i64 - 1);
            total += w * (link.reduced_euler() - sphere);
        }
        rows.push((j, lhs, sign(jj) * total));
    }
    Ok(rows)
}

/// Right-hand side of the connected-links symmetry relation for the
/// sigma quotient, taken verbatim: unreduced Betti numbers of links,
/// top against bottom, under a uniform outer sign.
pub fn symmetry_rhs(field: PrimeField, complex: &SimplicialComplex) -> i64 {
    let d = complex.ring_dim().expect("nonvoid complex") as i64;
    let mut total = 0i64;
    for f in complex.all_faces() {
        let w = binom(d - f.len() as i64, d - 1);
        if w == 0 {
            continue;
        }
        let link = complex.link(f).expect("face of the complex");
        let top = unreduced_betti(field, &link, (d - 1 - f.len() as i64) as i32) as i64;
        let bottom = unreduced_betti(field, &link, 0) as i64;
        total += w * (top - bottom);
    }
    sign(d - 1) * total
}

/// Hypotheses of the symmetry relation: pure, connected, every vertex
/// link connected, and at least two degrees between the compared
/// entries.
pub fn symmetry_hypotheses(complex: &SimplicialComplex) -> bool {
    if complex.ring_dim().map_or(true, |d| d < 2) {
        return false;
    }
    if !complex.is_pure() || !complex.is_connected() {
        return false;
    }
    (0..complex.n_vertices() as u32).all(|v| {
        complex
            .link(&Face::new(vec![v]))
            .expect("vertex of the complex")
            .is_connected()
    })
}
