//! Reading and writing complexes.
//!
//! Text format: one facet per line, vertices separated by whitespace,
//! `#` starts a comment, blank lines are skipped. A file with no
//! facets is the void complex. The text format cannot express the
//! empty complex (a facet with no vertices); use JSON for that.
//!
//! JSON format: `{"vertices": [..], "facets": [[..], ..]}` with
//! `vertices` optional; when present it fixes the vertex order, which
//! matters only for reproducibility of seeded parameter choices.
//! `"facets": []` is the void complex, `"facets": [[]]` the empty one.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<String>>,
    facets: Vec<Vec<String>>,
}

fn check_no_duplicates(facets: &[Vec<String>], line_of: impl Fn(usize) -> usize) -> Result<()> {
    for (i, f) in facets.iter().enumerate() {
        let mut seen = f.clone();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line: line_of(i),
                msg: format!("facet repeats a vertex: {}", f.join(" ")),
            });
        }
    }
    Ok(())
}

pub fn parse_text(src: &str) -> Result<SimplicialComplex> {
    let mut facets: Vec<Vec<String>> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    for (n, raw) in src.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<String> = content.split_whitespace().map(str::to_string).collect();
        if tokens.is_empty() {
            continue;
        }
        facets.push(tokens);
        lines.push(n + 1);
    }
    check_no_duplicates(&facets, |i| lines[i])?;
    if facets.is_empty() {
        return Ok(SimplicialComplex::void());
    }
    Ok(SimplicialComplex::from_facets(&facets))
}

pub fn parse_json(src: &str) -> Result<SimplicialComplex> {
    let parsed: ComplexJson = serde_json::from_str(src)?;
    check_no_duplicates(&parsed.facets, |_| 0)?;
    if parsed.facets.is_empty() {
        return Ok(SimplicialComplex::void());
    }
    Ok(match parsed.vertices {
        Some(names) => SimplicialComplex::from_facets_named(names, &parsed.facets),
        None => SimplicialComplex::from_facets(&parsed.facets),
    })
}

/// Loads a complex from a file, sniffing the format: content starting
/// with `{` is JSON, anything else is the text format.
pub fn load_path(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    let src = std::fs::read_to_string(path)?;
    if src.trim_start().starts_with('{') {
        parse_json(&src)
    } else {
        parse_text(&src)
    }
}

pub fn to_json(c: &SimplicialComplex) -> String {
    let facets = c
        .facets()
        .iter()
        .map(|f| {
            f.vertices()
                .iter()
                .map(|&v| c.vertex_name(v).to_string())
                .collect()
        })
        .collect();
    let doc = ComplexJson {
        vertices: if c.n_vertices() > 0 {
            Some(c.vertex_names().to_vec())
        } else {
            None
        },
        facets,
    };
    serde_json::to_string_pretty(&doc).expect("serializing a complex cannot fail")
}
