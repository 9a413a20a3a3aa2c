//! Finite simplicial complexes and their combinatorial invariants.
//!
//! Two degenerate complexes are kept distinct throughout the crate:
//! the void complex (no faces at all) and the empty complex (the empty
//! face only). The empty complex has dimension -1, an f-vector [1],
//! and reduced Euler characteristic -1; the void complex has no
//! dimension and every enumeration over it is empty.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// A face: strictly increasing vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new(mut v: Vec<u32>) -> Self {
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Face::new(v)
    }

    pub fn minus(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn with_vertex(&self, v: u32) -> Face {
        let mut w = self.0.clone();
        w.push(v);
        Face::new(w)
    }

    pub fn without_vertex(&self, v: u32) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// Position of `v` in the sorted vertex list, for coboundary signs.
    pub fn position(&self, v: u32) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }
}

/// A finite simplicial complex with named vertices. Vertex ids are
/// indices into `vertex_names`; every name occurs in some facet.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertex_names: Vec<String>,
    name_index: HashMap<String, u32>,
    facets: Vec<Face>,
    /// faces[k] = all faces with k vertices, sorted. faces[0] is the
    /// empty face alone. Void complex: the whole vector is empty.
    faces: Vec<Vec<Face>>,
    face_set: HashSet<Face>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex {
            vertex_names: Vec::new(),
            name_index: HashMap::new(),
            facets: Vec::new(),
            faces: Vec::new(),
            face_set: HashSet::new(),
        }
    }

    /// The complex whose only face is the empty face.
    pub fn empty() -> Self {
        Self::build(Vec::new(), vec![Face::empty()])
    }

    /// Builds from facet name lists. Vertex ids follow (length, lex)
    /// order of the names, so numeric labels sort naturally. An empty
    /// outer list is the void complex; an empty inner list is the
    /// empty face.
    pub fn from_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Self {
        let mut names: Vec<String> = facets
            .iter()
            .flatten()
            .map(|s| s.as_ref().to_string())
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        names.sort_by(|a, b| (a.len(), a.as_str()).cmp(&(b.len(), b.as_str())));
        Self::from_facets_named(names, facets)
    }

    /// Same as [`from_facets`](Self::from_facets) but with an explicit
    /// vertex order. Declared names that appear in no facet are
    /// dropped: a vertex that is not a face contributes nothing to any
    /// invariant computed here.
    pub fn from_facets_named<S: AsRef<str>>(names: Vec<String>, facets: &[Vec<S>]) -> Self {
        let used: HashSet<&str> = facets.iter().flatten().map(|s| s.as_ref()).collect();
        let mut kept: Vec<String> = names.into_iter().filter(|n| used.contains(n.as_str())).collect();
        for n in &used {
            if !kept.iter().any(|k| k == n) {
                kept.push(n.to_string());
            }
        }
        let index: HashMap<String, u32> = kept
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i as u32))
            .collect();
        let faces: Vec<Face> = facets
            .iter()
            .map(|f| Face::new(f.iter().map(|s| index[s.as_ref()]).collect()))
            .collect();
        let mut c = Self::build(kept, faces);
        c.name_index = index;
        c
    }

    /// Internal: from id-level candidate facets. Keeps maximal ones,
    /// closes under subsets.
    fn build(vertex_names: Vec<String>, candidates: Vec<Face>) -> Self {
        let name_index = vertex_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i as u32))
            .collect();
        let mut facets: Vec<Face> = Vec::new();
        for f in candidates {
            if facets.iter().any(|g| f.is_subset_of(g)) {
                continue;
            }
            facets.retain(|g| !g.is_subset_of(&f));
            facets.push(f);
        }
        facets.sort();
        let mut face_set: HashSet<Face> = HashSet::new();
        for f in &facets {
            let vs = f.vertices();
            assert!(vs.len() <= 25, "facet too large");
            for mask in 0u32..(1 << vs.len()) {
                let sub: Vec<u32> = (0..vs.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| vs[i])
                    .collect();
                face_set.insert(Face(sub));
            }
        }
        let max_len = facets.iter().map(|f| f.len()).max();
        let mut faces: Vec<Vec<Face>> = match max_len {
            None => Vec::new(),
            Some(m) => vec![Vec::new(); m + 1],
        };
        for f in &face_set {
            faces[f.len()].push(f.clone());
        }
        for bucket in &mut faces {
            bucket.sort();
        }
        SimplicialComplex {
            vertex_names,
            name_index,
            facets,
            faces,
            face_set,
        }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// None for the void complex, otherwise the top face dimension
    /// (so Some(-1) for the empty complex).
    pub fn dim(&self) -> Option<i32> {
        if self.is_void() {
            None
        } else {
            Some(self.faces.len() as i32 - 2)
        }
    }

    /// Krull dimension of the face ring: dim + 1. Errors on the void
    /// complex, which has no face ring.
    pub fn ring_dim(&self) -> Result<usize> {
        if self.is_void() {
            Err(Error::VoidComplex)
        } else {
            Ok(self.faces.len() - 1)
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_name(&self, v: u32) -> &str {
        &self.vertex_names[v as usize]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn has_face(&self, f: &Face) -> bool {
        self.face_set.contains(f)
    }

    /// Faces with exactly `k` vertices, sorted. Empty slice when out
    /// of range.
    pub fn faces_with_size(&self, k: usize) -> &[Face] {
        self.faces.get(k).map_or(&[], |v| v.as_slice())
    }

    /// All faces including the empty face, smallest first.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    pub fn nonempty_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().skip(1).flatten()
    }

    /// Index of a face within its size bucket.
    pub fn face_index(&self, f: &Face) -> Option<usize> {
        self.faces
            .get(f.len())
            .and_then(|bucket| bucket.binary_search(f).ok())
    }

    pub fn face_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Face> {
        let mut ids = Vec::with_capacity(names.len());
        for n in names {
            match self.name_index.get(n.as_ref()) {
                Some(&id) => ids.push(id),
                None => {
                    return Err(Error::FaceNotInComplex(
                        names.iter().map(|s| s.as_ref()).collect::<Vec<_>>().join(" "),
                    ))
                }
            }
        }
        let f = Face::new(ids);
        if self.has_face(&f) {
            Ok(f)
        } else {
            Err(Error::FaceNotInComplex(self.face_label(&f)))
        }
    }

    pub fn face_label(&self, f: &Face) -> String {
        if f.is_empty() {
            return "(empty)".to_string();
        }
        f.vertices()
            .iter()
            .map(|&v| self.vertex_name(v))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// f-vector indexed from the empty face: entry k counts faces with
    /// k vertices. Empty for the void complex.
    pub fn f_vector(&self) -> Vec<i64> {
        self.faces.iter().map(|b| b.len() as i64).collect()
    }

    /// h-vector of length ring_dim + 1, from the alternating-sum
    /// transform of the f-vector. Empty for the void complex.
    pub fn h_vector(&self) -> Vec<i64> {
        if self.is_void() {
            return Vec::new();
        }
        let f = self.f_vector();
        let d = f.len() as i64 - 1;
        (0..=d)
            .map(|i| {
                (0..=i)
                    .map(|j| sign(i - j) * binom(d - j, i - j) * f[j as usize])
                    .sum()
            })
            .collect()
    }

    /// Reduced Euler characteristic: alternating face count with the
    /// empty face contributing -1. Zero for the void complex.
    pub fn reduced_euler(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(k, b)| -sign(k as i64) * b.len() as i64)
            .sum()
    }

    /// Link of `f`: all faces disjoint from `f` whose union with `f`
    /// is a face, on the original vertex names. Errors if `f` is not
    /// a face.
    pub fn link(&self, f: &Face) -> Result<SimplicialComplex> {
        if !self.has_face(f) {
            return Err(Error::FaceNotInComplex(self.face_label(f)));
        }
        let facet_names: Vec<Vec<String>> = self
            .facets
            .iter()
            .filter(|t| f.is_subset_of(t))
            .map(|t| {
                t.minus(f)
                    .vertices()
                    .iter()
                    .map(|&v| self.vertex_name(v).to_string())
                    .collect()
            })
            .collect();
        Ok(SimplicialComplex::from_facets_named(
            self.vertex_names.clone(),
            &facet_names,
        ))
    }

    /// The faces not containing `f` as a subset, which form a
    /// subcomplex. For the empty face this is the void complex, since
    /// the empty face is contained in everything.
    pub fn contrastar(&self, f: &Face) -> Result<SimplicialComplex> {
        if !self.has_face(f) {
            return Err(Error::FaceNotInComplex(self.face_label(f)));
        }
        if f.is_empty() {
            return Ok(SimplicialComplex::void());
        }
        let mut cands: Vec<Vec<String>> = Vec::new();
        for t in &self.facets {
            if !f.is_subset_of(t) {
                cands.push(t.vertices().iter().map(|&v| self.vertex_name(v).to_string()).collect());
            } else {
                for &v in f.vertices() {
                    cands.push(
                        t.without_vertex(v)
                            .vertices()
                            .iter()
                            .map(|&w| self.vertex_name(w).to_string())
                            .collect(),
                    );
                }
            }
        }
        Ok(SimplicialComplex::from_facets_named(
            self.vertex_names.clone(),
            &cands,
        ))
    }

    /// Every face of `other` (matched by vertex names) is a face here.
    pub fn contains_complex(&self, other: &SimplicialComplex) -> bool {
        other.facets.iter().all(|f| {
            let names: Vec<&str> = f.vertices().iter().map(|&v| other.vertex_name(v)).collect();
            self.face_from_names(&names).is_ok()
        })
    }

    fn fresh_name(&self, base: &str) -> String {
        if !self.name_index.contains_key(base) {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| !self.name_index.contains_key(n))
            .unwrap()
    }

    /// Join with a single new vertex. The void complex stays void (the
    /// join has no faces to combine).
    pub fn cone(&self) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void();
        }
        let apex = self.fresh_name("apex");
        let mut names = self.vertex_names.clone();
        names.push(apex.clone());
        let facet_names: Vec<Vec<String>> = self
            .facets
            .iter()
            .map(|t| {
                let mut f: Vec<String> =
                    t.vertices().iter().map(|&v| self.vertex_name(v).to_string()).collect();
                f.push(apex.clone());
                f
            })
            .collect();
        SimplicialComplex::from_facets_named(names, &facet_names)
    }

    /// Join with two new vertices forming a zero-sphere.
    pub fn suspension(&self) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void();
        }
        let north = self.fresh_name("north");
        let south = self.fresh_name("south");
        let mut names = self.vertex_names.clone();
        names.push(north.clone());
        names.push(south.clone());
        let mut facet_names: Vec<Vec<String>> = Vec::with_capacity(2 * self.facets.len());
        for t in &self.facets {
            let base: Vec<String> =
                t.vertices().iter().map(|&v| self.vertex_name(v).to_string()).collect();
            for pole in [&north, &south] {
                let mut f = base.clone();
                f.push(pole.clone());
                facet_names.push(f);
            }
        }
        SimplicialComplex::from_facets_named(names, &facet_names)
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].len() == w[1].len())
    }

    /// Connectivity of the vertex-edge graph; complexes with at most
    /// one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n_vertices();
        if n <= 1 {
            return true;
        }
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], v: u32) -> u32 {
            let mut r = v;
            while parent[r as usize] != r {
                r = parent[r as usize];
            }
            let mut c = v;
            while parent[c as usize] != r {
                let next = parent[c as usize];
                parent[c as usize] = r;
                c = next;
            }
            r
        }
        for e in self.faces_with_size(2) {
            let a = find(&mut parent, e.vertices()[0]);
            let b = find(&mut parent, e.vertices()[1]);
            parent[a as usize] = b;
        }
        let root = find(&mut parent, 0);
        (1..n as u32).all(|v| find(&mut parent, v) == root)
    }

    /// Boundary of the k-simplex: all k-subsets of k+1 vertices.
    pub fn boundary_simplex(k: usize) -> SimplicialComplex {
        assert!(k >= 1);
        let names: Vec<String> = (1..=k + 1).map(|i| i.to_string()).collect();
        let mut facets: Vec<Vec<String>> = Vec::new();
        for omit in 0..=k {
            facets.push(
                names
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != omit)
                    .map(|(_, n)| n.clone())
                    .collect(),
            );
        }
        SimplicialComplex::from_facets_named(names, &facets)
    }
}

/// (-1)^k with the sign convention extended to negative k.
pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Binomial coefficient, zero outside 0 <= k <= n. Callers rely on the
/// vanishing convention for negative n; this is not the polynomial
/// extension.
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

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> SimplicialComplex {
        SimplicialComplex::from_facets(&[vec!["a", "b", "c"], vec!["c", "d", "e"]])
    }

    #[test]
    fn binom_conventions() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(2, 5), 0);
        assert_eq!(binom(52, 5), 2_598_960);
    }

    #[test]
    fn degenerate_complexes() {
        let void = SimplicialComplex::void();
        assert!(void.is_void());
        assert_eq!(void.dim(), None);
        assert_eq!(void.f_vector(), Vec::<i64>::new());
        assert_eq!(void.h_vector(), Vec::<i64>::new());
        assert_eq!(void.reduced_euler(), 0);
        assert!(void.ring_dim().is_err());

        let empty = SimplicialComplex::empty();
        assert!(!empty.is_void());
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(empty.f_vector(), vec![1]);
        assert_eq!(empty.h_vector(), vec![1]);
        assert_eq!(empty.reduced_euler(), -1);
        assert_eq!(empty.ring_dim().unwrap(), 0);
        assert!(empty.has_face(&Face::empty()));
    }

    #[test]
    fn bowtie_counts() {
        let b = bowtie();
        assert_eq!(b.dim(), Some(2));
        assert_eq!(b.f_vector(), vec![1, 5, 6, 2]);
        assert_eq!(b.h_vector(), vec![1, 2, -1, 0]);
        assert_eq!(b.reduced_euler(), 0);
        assert!(b.is_pure());
        assert!(b.is_connected());
    }

    #[test]
    fn simplex_boundaries() {
        let s = SimplicialComplex::boundary_simplex(3);
        assert_eq!(s.f_vector(), vec![1, 4, 6, 4]);
        assert_eq!(s.h_vector(), vec![1, 1, 1, 1]);
        assert_eq!(s.reduced_euler(), 1);
        let s0 = SimplicialComplex::boundary_simplex(1);
        assert_eq!(s0.f_vector(), vec![1, 2]);
        assert_eq!(s0.h_vector(), vec![1, 1]);
        // Top h entry is the signed reduced Euler characteristic.
        for k in 1..=5 {
            let s = SimplicialComplex::boundary_simplex(k);
            let h = s.h_vector();
            let d = s.ring_dim().unwrap() as i64;
            assert_eq!(*h.last().unwrap(), sign(d - 1) * s.reduced_euler());
        }
    }

    #[test]
    fn maximal_face_absorption() {
        let c = SimplicialComplex::from_facets(&[
            vec!["a", "b"],
            vec!["a"],
            vec!["b", "c"],
            vec!["a", "b"],
        ]);
        assert_eq!(c.facets().len(), 2);
        assert_eq!(c.f_vector(), vec![1, 3, 2]);
    }

    #[test]
    fn links() {
        let b = bowtie();
        let c = b.face_from_names(&["c"]).unwrap();
        let lk = b.link(&c).unwrap();
        assert_eq!(lk.f_vector(), vec![1, 4, 2]);
        assert!(!lk.is_connected());
        // Link of the empty face is the complex itself.
        let lk0 = b.link(&Face::empty()).unwrap();
        assert_eq!(lk0.f_vector(), b.f_vector());
        // Link of a facet is the empty complex.
        let abc = b.face_from_names(&["a", "b", "c"]).unwrap();
        let lkf = b.link(&abc).unwrap();
        assert_eq!(lkf.dim(), Some(-1));
        // Link vertices keep their names.
        assert!(lk.face_from_names(&["a", "b"]).is_ok());
        assert!(b.face_from_names(&["z"]).is_err());
        assert!(b.face_from_names(&["a", "d"]).is_err());
    }

    #[test]
    fn contrastar_faces() {
        let b = bowtie();
        let c = b.face_from_names(&["c"]).unwrap();
        let cs = b.contrastar(&c).unwrap();
        // Exactly the faces avoiding c.
        assert_eq!(cs.f_vector(), vec![1, 4, 2]);
        let ab = b.face_from_names(&["a", "b"]).unwrap();
        let cs2 = b.contrastar(&ab).unwrap();
        assert_eq!(cs2.f_vector(), vec![1, 5, 5, 1]);
        assert!(b.contrastar(&Face::empty()).unwrap().is_void());
    }

    #[test]
    fn cone_and_suspension() {
        let s0 = SimplicialComplex::boundary_simplex(1);
        let cone = s0.cone();
        assert_eq!(cone.h_vector(), vec![1, 1, 0]);
        let susp = s0.suspension();
        assert_eq!(susp.f_vector(), vec![1, 4, 4]);
        assert_eq!(susp.h_vector(), vec![1, 2, 1]);
        // Coning the empty complex gives a point.
        let pt = SimplicialComplex::empty().cone();
        assert_eq!(pt.f_vector(), vec![1, 1]);
        // Apex names avoid collisions.
        let tricky = SimplicialComplex::from_facets(&[vec!["apex", "north"]]);
        let coned = tricky.cone();
        assert_eq!(coned.n_vertices(), 3);
        assert!(coned.vertex_names().iter().any(|n| n == "apex_1"));
    }

    #[test]
    fn purity_and_connectivity() {
        let de = SimplicialComplex::from_facets(&[vec!["a", "b"], vec!["c", "d"]]);
        assert!(de.is_pure());
        assert!(!de.is_connected());
        let np = SimplicialComplex::from_facets(&[vec!["a", "b", "c"], vec!["c", "d"]]);
        assert!(!np.is_pure());
        assert!(np.is_connected());
        assert!(SimplicialComplex::empty().is_connected());
        assert!(SimplicialComplex::void().is_connected());
    }

    #[test]
    fn subcomplex_check() {
        let b = bowtie();
        let edge = SimplicialComplex::from_facets(&[vec!["a", "b"]]);
        assert!(b.contains_complex(&edge));
        let other = SimplicialComplex::from_facets(&[vec!["a", "d"]]);
        assert!(!b.contains_complex(&other));
        let renamed = SimplicialComplex::from_facets(&[vec!["x", "y"]]);
        assert!(!b.contains_complex(&renamed));
    }

    #[test]
    fn face_ops() {
        let f = Face::new(vec![3, 1, 2]);
        assert_eq!(f.vertices(), &[1, 2, 3]);
        let g = Face::new(vec![2, 4]);
        assert!(!g.is_subset_of(&f));
        assert!(Face::new(vec![1, 3]).is_subset_of(&f));
        assert!(Face::empty().is_subset_of(&f));
        assert!(!f.is_subset_of(&Face::empty()));
        assert_eq!(f.union(&g).vertices(), &[1, 2, 3, 4]);
        assert_eq!(f.minus(&g).vertices(), &[1, 3]);
        assert_eq!(f.position(2), Some(1));
        assert_eq!(f.position(5), None);
    }

    #[test]
    fn vertex_order_is_natural_for_numerals() {
        let c = SimplicialComplex::from_facets(&[vec!["10", "2", "1"]]);
        assert_eq!(c.vertex_names(), &["1", "2", "10"]);
    }
}
