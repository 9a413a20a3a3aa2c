//! Named complexes used by the command line tool and the test suite:
//! spheres, the two small closed surfaces, and the standard
//! counterexample shapes, plus cones and suspensions of a few of them.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "empty", summary: "the empty complex, dimension -1" },
    CatalogEntry { name: "s0", summary: "two points" },
    CatalogEntry { name: "cycle_4", summary: "square, a 4-cycle" },
    CatalogEntry { name: "cycle_5", summary: "pentagon, a 5-cycle" },
    CatalogEntry { name: "cycle_6", summary: "hexagon, a 6-cycle" },
    CatalogEntry { name: "boundary_simplex_2", summary: "triangle boundary, a circle" },
    CatalogEntry { name: "boundary_simplex_3", summary: "tetrahedron boundary, a 2-sphere" },
    CatalogEntry { name: "boundary_simplex_4", summary: "4-simplex boundary, a 3-sphere" },
    CatalogEntry { name: "boundary_simplex_5", summary: "5-simplex boundary, a 4-sphere" },
    CatalogEntry { name: "rp2_6", summary: "real projective plane, 6-vertex triangulation" },
    CatalogEntry { name: "torus_7", summary: "torus, 7-vertex triangulation" },
    CatalogEntry { name: "bowtie", summary: "two triangles glued at a vertex" },
    CatalogEntry { name: "disjoint_edges", summary: "two disjoint edges" },
    CatalogEntry { name: "cone_bowtie", summary: "cone over the bowtie" },
    CatalogEntry { name: "cone_rp2_6", summary: "cone over the projective plane" },
    CatalogEntry { name: "cone_torus_7", summary: "cone over the torus" },
    CatalogEntry { name: "cone_boundary_simplex_3", summary: "cone over the 2-sphere, a 3-ball" },
    CatalogEntry { name: "susp_bowtie", summary: "suspension of the bowtie" },
    CatalogEntry { name: "susp_rp2_6", summary: "suspension of the projective plane" },
    CatalogEntry { name: "susp_torus_7", summary: "suspension of the torus" },
    CatalogEntry { name: "susp_boundary_simplex_3", summary: "suspension of the 2-sphere, a 3-sphere" },
];

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

fn cycle(n: usize) -> SimplicialComplex {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let facets: Vec<Vec<String>> = (0..n)
        .map(|i| vec![names[i].clone(), names[(i + 1) % n].clone()])
        .collect();
    SimplicialComplex::from_facets_named(names, &facets)
}

fn rp2_6() -> SimplicialComplex {
    let facets = [
        [1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6],
        [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6],
    ];
    let names: Vec<String> = (1..=6).map(|i| i.to_string()).collect();
    let facet_names: Vec<Vec<String>> = facets
        .iter()
        .map(|f| f.iter().map(|v| v.to_string()).collect())
        .collect();
    SimplicialComplex::from_facets_named(names, &facet_names)
}

fn torus_7() -> SimplicialComplex {
    // The vertex-transitive 7-vertex torus: triangles {i, i+1, i+3}
    // and {i, i+2, i+3} mod 7.
    let names: Vec<String> = (1..=7).map(|i| i.to_string()).collect();
    let mut facet_names: Vec<Vec<String>> = Vec::new();
    for i in 0..7u32 {
        for offsets in [[0, 1, 3], [0, 2, 3]] {
            facet_names.push(offsets.iter().map(|o| ((i + o) % 7 + 1).to_string()).collect());
        }
    }
    SimplicialComplex::from_facets_named(names, &facet_names)
}

fn bowtie() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[vec!["a", "b", "c"], vec!["c", "d", "e"]])
}

fn disjoint_edges() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[vec!["a", "b"], vec!["c", "d"]])
}

pub fn build(name: &str) -> Result<SimplicialComplex> {
    let c = match name {
        "empty" => SimplicialComplex::empty(),
        "s0" => SimplicialComplex::boundary_simplex(1),
        "cycle_4" => cycle(4),
        "cycle_5" => cycle(5),
        "cycle_6" => cycle(6),
        "boundary_simplex_2" => SimplicialComplex::boundary_simplex(2),
        "boundary_simplex_3" => SimplicialComplex::boundary_simplex(3),
        "boundary_simplex_4" => SimplicialComplex::boundary_simplex(4),
        "boundary_simplex_5" => SimplicialComplex::boundary_simplex(5),
        "rp2_6" => rp2_6(),
        "torus_7" => torus_7(),
        "bowtie" => bowtie(),
        "disjoint_edges" => disjoint_edges(),
        _ => {
            if let Some(base) = name.strip_prefix("cone_") {
                build(base)?.cone()
            } else if let Some(base) = name.strip_prefix("susp_") {
                build(base)?.suspension()
            } else {
                return Err(Error::UnknownCatalog(name.to_string()));
            }
        }
    };
    Ok(c)
}
