//! Seeded random complexes for the verification populations. Both
//! generators walk subsets of a small vertex pool in a fixed order and
//! consult a counter-based generator, so a (parameters, seed) pair
//! always rebuilds the identical complex.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

const MAX_VERTICES: usize = 12;

fn check_bounds(n: usize, dim: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::DimensionMismatch(format!(
            "vertex count {n} outside 1..={MAX_VERTICES}"
        )));
    }
    if dim + 1 > n {
        return Err(Error::DimensionMismatch(format!(
            "dimension {dim} needs more than {n} vertices"
        )));
    }
    Ok(())
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    (1u32..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

fn facets_from_masks(n: usize, masks: &[u32]) -> SimplicialComplex {
    let names: Vec<Vec<String>> = masks
        .iter()
        .map(|m| (0..n as u32).filter(|v| m & (1 << v) != 0).map(|v| format!("v{v}")).collect())
        .collect();
    SimplicialComplex::from_facets(&names)
}

/// Downward closure of a density-thinned sample of all faces with at
/// most dim+1 vertices. Density 1 keeps everything and returns the
/// full skeleton; smaller densities drop faces independently, so the
/// result is frequently non-pure.
pub fn random_complex(n: usize, dim: usize, density: f64, seed: u64) -> Result<SimplicialComplex> {
    check_bounds(n, dim)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<u32> = Vec::new();
    for size in 1..=dim + 1 {
        for mask in subsets_of_size(n, size) {
            if rng.gen::<f64>() < density {
                picked.push(mask);
            }
        }
    }
    if picked.is_empty() {
        return Err(Error::EmptySample);
    }
    Ok(facets_from_masks(n, &picked))
}

/// Pure complex with exactly `count` facets of the requested
/// dimension, drawn without replacement from all candidates.
pub fn random_pure_complex(n: usize, dim: usize, count: usize, seed: u64) -> Result<SimplicialComplex> {
    check_bounds(n, dim)?;
    let mut candidates = subsets_of_size(n, dim + 1);
    if count == 0 {
        return Err(Error::EmptySample);
    }
    if count > candidates.len() {
        return Err(Error::DimensionMismatch(format!(
            "requested {count} facets but only {} subsets exist",
            candidates.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    candidates.shuffle(&mut rng);
    candidates.truncate(count);
    Ok(facets_from_masks(n, &candidates))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::binom;

    #[test]
    fn full_density_gives_full_skeleton() {
        let c = random_complex(6, 2, 1.0, 7).unwrap();
        assert_eq!(c.f_vector(), vec![1, 6, 15, 20]);
        assert!(c.is_pure());
    }

    #[test]
    fn seeds_are_reproducible() {
        for seed in [0, 1, 99] {
            let a = random_complex(8, 3, 0.4, seed).unwrap();
            let b = random_complex(8, 3, 0.4, seed).unwrap();
            assert_eq!(a.f_vector(), b.f_vector());
            assert_eq!(a.facets(), b.facets());
        }
        let a = random_pure_complex(7, 2, 8, 42).unwrap();
        let b = random_pure_complex(7, 2, 8, 42).unwrap();
        assert_eq!(a.facets(), b.facets());
    }

    #[test]
    fn pure_variant_counts_facets() {
        let c = random_pure_complex(7, 2, 8, 42).unwrap();
        assert!(c.is_pure());
        assert_eq!(c.dim(), Some(2));
        assert_eq!(c.facets().len(), 8);
        let full = random_pure_complex(5, 1, binom(5, 2) as usize, 3).unwrap();
        assert_eq!(full.f_vector(), vec![1, 5, 10]);
    }

    #[test]
    fn degenerate_requests_are_errors() {
        assert!(matches!(random_complex(6, 2, 0.0, 1), Err(Error::EmptySample)));
        assert!(matches!(random_pure_complex(6, 2, 0, 1), Err(Error::EmptySample)));
        assert!(random_pure_complex(6, 2, 21, 1).is_err());
        assert!(random_complex(13, 2, 0.5, 1).is_err());
        assert!(random_complex(4, 4, 0.5, 1).is_err());
    }

    #[test]
    fn thinning_reaches_nonpure_samples() {
        let mut nonpure = 0;
        for seed in 0..30 {
            if let Ok(c) = random_complex(7, 2, 0.35, seed) {
                if !c.is_pure() {
                    nonpure += 1;
                }
            }
        }
        assert!(nonpure > 5, "only {nonpure} non-pure samples");
    }
}
