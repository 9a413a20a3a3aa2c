//! Two-sided verification of the registered identities. Every check
//! computes an algebraic side from the reduction engine and an
//! independent topological or combinatorial side from the predictors,
//! then compares exactly. Hypotheses are gated here so the predictors
//! stay callable off-hypothesis.

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog;
use crate::cohomology::{is_buchsbaum, is_cohen_macaulay, reduced_betti};
use crate::complex::{binom, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::local_cohomology::{
    ds_relation_rows, predict_h_alg_dminus1, predict_h_sigma_dminus1, predict_kernel_jminus2,
    predict_hsigma_buchsbaum, predict_schenzel, predict_suspension, symmetry_hypotheses, symmetry_rhs,
    conjecture_h_tau,
};
use crate::lsop::ThetaContext;
use crate::random::{random_complex, random_pure_complex};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TheoremId {
    Stanley,
    Schenzel,
    HsigmaBuchsbaum,
    TopEntry,
    HilbertDecomposition,
    KernelDim,
    HalgDminus1,
    HsigmaDminus1,
    Suspension,
    DehnSommerville,
    Symmetry,
    TauConjecture,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::Stanley,
        TheoremId::Schenzel,
        TheoremId::HsigmaBuchsbaum,
        TheoremId::TopEntry,
        TheoremId::HilbertDecomposition,
        TheoremId::KernelDim,
        TheoremId::HalgDminus1,
        TheoremId::HsigmaDminus1,
        TheoremId::Suspension,
        TheoremId::DehnSommerville,
        TheoremId::Symmetry,
        TheoremId::TauConjecture,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            TheoremId::Stanley => "stanley",
            TheoremId::Schenzel => "schenzel",
            TheoremId::HsigmaBuchsbaum => "hsigma-buchsbaum",
            TheoremId::TopEntry => "top-entry",
            TheoremId::HilbertDecomposition => "hilbert-decomposition",
            TheoremId::KernelDim => "kernel-dim",
            TheoremId::HalgDminus1 => "halg-dminus1",
            TheoremId::HsigmaDminus1 => "hsigma-dminus1",
            TheoremId::Suspension => "suspension",
            TheoremId::DehnSommerville => "dehn-sommerville",
            TheoremId::Symmetry => "symmetry",
            TheoremId::TauConjecture => "tau-conjecture",
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.slug() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Observed,
    Skip,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub complex: String,
    pub p: u64,
    pub seed: u64,
    pub hypotheses: String,
    pub lhs: Value,
    pub rhs: Value,
    pub verdict: Verdict,
    pub wall_ms: u64,
}

/// If the complex is a join of two non-adjacent vertices with a common
/// link, returns that link.
pub fn suspension_base(complex: &SimplicialComplex) -> Option<SimplicialComplex> {
    let n = complex.n_vertices() as u32;
    for u in 0..n {
        for w in u + 1..n {
            if complex.has_face(&Face::new(vec![u, w])) {
                continue;
            }
            if !complex.facets().iter().all(|f| f.contains(u) || f.contains(w)) {
                continue;
            }
            let lu = complex.link(&Face::new(vec![u])).expect("vertex");
            let lw = complex.link(&Face::new(vec![w])).expect("vertex");
            if named_facets(&lu) == named_facets(&lw) {
                return Some(lu);
            }
        }
    }
    None
}

fn named_facets(c: &SimplicialComplex) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = c
        .facets()
        .iter()
        .map(|f| {
            let mut names: Vec<String> = f
                .vertices()
                .iter()
                .map(|&v| c.vertex_name(v).to_string())
                .collect();
            names.sort();
            names
        })
        .collect();
    out.sort();
    out
}

/// Checks one identity on one complex over one field. The report
/// records both sides verbatim; FAIL is only possible when the
/// hypotheses hold and the check is not an exploratory one.
pub fn verify(
    id: TheoremId,
    name: &str,
    complex: &SimplicialComplex,
    field: PrimeField,
    seed: u64,
) -> VerificationReport {
    let start = Instant::now();
    let (hypotheses, lhs, rhs, verdict) = match sides(id, complex, field, seed) {
        Ok((lhs, rhs, equal)) => {
            // Identities about generic parameter systems on arbitrary
            // complexes are only certified over a field large enough
            // for random systems to be generic; below that a mismatch
            // is recorded rather than graded, since no rational system
            // may attain the generic dimensions on both sides.
            let generic_uncertified = field.modulus() < crate::lsop::SMALL_FIELD_LIMIT
                && matches!(
                    id,
                    TheoremId::KernelDim
                        | TheoremId::HalgDminus1
                        | TheoremId::HsigmaDminus1
                        | TheoremId::Suspension
                );
            let verdict = match id {
                TheoremId::TauConjecture => Verdict::Observed,
                TheoremId::Symmetry if !equal => Verdict::Observed,
                _ if equal => Verdict::Pass,
                _ if generic_uncertified => Verdict::Observed,
                _ => Verdict::Fail,
            };
            let hypotheses = if verdict == Verdict::Observed && generic_uncertified {
                "PASS (generic-parameter premise uncertified over this field)".to_string()
            } else {
                "PASS".to_string()
            };
            (hypotheses, lhs, rhs, verdict)
        }
        Err(reason) => (format!("SKIP: {reason}"), Value::Null, Value::Null, Verdict::Skip),
    };
    VerificationReport {
        theorem: id.slug().to_string(),
        complex: name.to_string(),
        p: field.modulus(),
        seed,
        hypotheses,
        lhs,
        rhs,
        verdict,
        wall_ms: start.elapsed().as_millis() as u64,
    }
}

type Sides = std::result::Result<(Value, Value, bool), String>;

fn theta(complex: &SimplicialComplex, field: PrimeField, seed: u64) -> std::result::Result<ThetaContext, String> {
    ThetaContext::from_seed(field, complex, seed).map_err(|e| e.to_string())
}

fn sides(id: TheoremId, complex: &SimplicialComplex, field: PrimeField, seed: u64) -> Sides {
    if complex.is_void() {
        return Err("void complex".into());
    }
    let d = complex.ring_dim().expect("nonvoid");
    match id {
        TheoremId::Stanley => {
            if !is_cohen_macaulay(field, complex) {
                return Err("not cohen-macaulay over this field".into());
            }
            let mut ctx = theta(complex, field, seed)?;
            let lhs = json!(ctx.h_alg_vector());
            let rhs = json!(complex.h_vector());
            let equal = lhs == rhs;
            Ok((lhs, rhs, equal))
        }
        TheoremId::Schenzel => {
            if !is_buchsbaum(field, complex) {
                return Err("not buchsbaum over this field".into());
            }
            let mut ctx = theta(complex, field, seed)?;
            let lhs = json!(ctx.h_alg_vector());
            let rhs = json!((0..=d).map(|i| predict_schenzel(field, complex, i)).collect::<Vec<_>>());
            let equal = lhs == rhs;
            Ok((lhs, rhs, equal))
        }
        TheoremId::HsigmaBuchsbaum => {
            if !is_buchsbaum(field, complex) {
                return Err("not buchsbaum over this field".into());
            }
            let mut ctx = theta(complex, field, seed)?;
            let lhs = json!(ctx.h_sigma_vector());
            let rhs = json!((0..=d).map(|i| predict_hsigma_buchsbaum(field, complex, i)).collect::<Vec<_>>());
            let equal = lhs == rhs;
            Ok((lhs, rhs, equal))
        }
        TheoremId::TopEntry => {
            let mut ctx = theta(complex, field, seed)?;
            let lhs = json!(ctx.h_alg(d));
            let rhs = json!(reduced_betti(field, complex, d as i32 - 1) as i64);
            let equal = lhs == rhs;
            Ok((lhs, rhs, equal))
        }
        TheoremId::HilbertDecomposition => {
            let mut ctx = theta(complex, field, seed)?;
            let report = ctx.hilbert_decomposition();
            let zeros = vec![0i64; report.residuals.len()];
            let lhs = json!(report.residuals);
            let rhs = json!(zeros);
            let equal = lhs == rhs;
            Ok((lhs, rhs, equal))
        }
        TheoremId::KernelDim => {
            let mut ctx = theta(complex, field, seed)?;
            let forms = ctx.forms().to_vec();
            let mut lhs = Vec::with_capacity(d);
            let mut rhs = Vec::with_capacity(d);
            for j in 1..=d {
                lhs.push(if j >= 2 { ctx.k0_dim(j, j - 2) as i64 } else { 0 });
                rhs.push(predict_kernel_jminus2(field, complex, &forms, j));
            }
            let equal = lhs == rhs;
            Ok((json!(lhs), json!(rhs), equal))
        }
        TheoremId::HalgDminus1 => {
            if d == 0 {
                return Err("zero-dimensional face ring".into());
            }
            let mut ctx = theta(complex, field, seed)?;
            let forms = ctx.forms().to_vec();
            let lhs = json!(ctx.h_alg(d - 1));
            let rhs = json!(predict_h_alg_dminus1(field, complex, &forms));
            let equal = lhs == rhs;
            Ok((lhs, rhs, equal))
        }
        TheoremId::HsigmaDminus1 => {
            if d == 0 {
                return Err("zero-dimensional face ring".into());
            }
            let mut ctx = theta(complex, field, seed)?;
            let lhs = json!(ctx.h_sigma(d - 1));
            let rhs = json!(predict_h_sigma_dminus1(field, complex));
            let equal = lhs == rhs;
            Ok((lhs, rhs, equal))
        }
        TheoremId::Suspension => {
            let base = suspension_base(complex).ok_or("not a suspension")?;
            if !is_buchsbaum(field, &base) {
                return Err("suspension base is not buchsbaum over this field".into());
            }
            let mut ctx = theta(complex, field, seed)?;
            let reduction = ctx.h_alg_vector();
            let closed: Vec<i64> = (0..=d).map(|i| predict_suspension(field, complex, i)).collect();
            let mut base_ctx = theta(&base, field, seed)?;
            let base_alg = base_ctx.h_alg_vector();
            let at = |i: i64| -> i64 {
                if (0..base_alg.len() as i64).contains(&i) {
                    base_alg[i as usize]
                } else {
                    0
                }
            };
            let three_term: Vec<i64> = (0..=d as i64)
                .map(|i| {
                    at(i) + at(i - 1)
                        - binom(d as i64 - 2, i - 1)
                            * reduced_betti(field, &base, i as i32 - 2) as i64
                })
                .collect();
            let equal = reduction == closed && reduction == three_term;
            Ok((
                json!({ "reduction": reduction }),
                json!({ "closed_form": closed, "base_relation": three_term }),
                equal,
            ))
        }
        TheoremId::DehnSommerville => {
            let rows = ds_relation_rows(complex).map_err(|e| e.to_string())?;
            let lhs: Vec<i64> = rows.iter().map(|&(_, l, _)| l).collect();
            let rhs: Vec<i64> = rows.iter().map(|&(_, _, r)| r).collect();
            let equal = lhs == rhs;
            Ok((json!(lhs), json!(rhs), equal))
        }
        TheoremId::Symmetry => {
            if !symmetry_hypotheses(complex) {
                return Err("needs a pure connected complex with connected vertex links".into());
            }
            let mut ctx = theta(complex, field, seed)?;
            let lhs = json!(ctx.h_sigma(1) - ctx.h_sigma(d - 1));
            let rhs = json!(symmetry_rhs(field, complex));
            let equal = lhs == rhs;
            Ok((lhs, rhs, equal))
        }
        TheoremId::TauConjecture => {
            let mut ctx = theta(complex, field, seed)?;
            let lhs = json!(ctx.h_tau_vector().map_err(|e| e.to_string())?);
            let rhs = json!((0..=d).map(|i| conjecture_h_tau(field, complex, i)).collect::<Vec<_>>());
            let equal = lhs == rhs;
            Ok((lhs, rhs, equal))
        }
    }
}

/// One complex to run: a catalog member, a file, or a seeded random
/// sample.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComplexSpec {
    Catalog { name: String },
    File { path: String },
    Random { n: usize, dim: usize, density: f64, seed: u64 },
    RandomPure { n: usize, dim: usize, count: usize, seed: u64 },
}

impl ComplexSpec {
    pub fn label(&self) -> String {
        match self {
            ComplexSpec::Catalog { name } => name.clone(),
            ComplexSpec::File { path } => path.clone(),
            ComplexSpec::Random { n, dim, density, seed } => {
                format!("random(n={n},dim={dim},density={density},seed={seed})")
            }
            ComplexSpec::RandomPure { n, dim, count, seed } => {
                format!("random_pure(n={n},dim={dim},count={count},seed={seed})")
            }
        }
    }

    pub fn build(&self) -> Result<SimplicialComplex> {
        match self {
            ComplexSpec::Catalog { name } => catalog::build(name),
            ComplexSpec::File { path } => crate::io::load_path(path),
            ComplexSpec::Random { n, dim, density, seed } => random_complex(*n, *dim, *density, *seed),
            ComplexSpec::RandomPure { n, dim, count, seed } => {
                random_pure_complex(*n, *dim, *count, *seed)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub complexes: Vec<ComplexSpec>,
    pub primes: Vec<u64>,
    #[serde(default = "one_seed")]
    pub seeds: Vec<u64>,
    /// Theorem slugs; empty means the whole registry.
    #[serde(default)]
    pub theorems: Vec<String>,
}

fn one_seed() -> Vec<u64> {
    vec![1]
}

/// Every catalog member against both small primes and the default
/// large one, the full registry, seed 1.
pub fn default_config() -> SuiteConfig {
    SuiteConfig {
        complexes: catalog::names()
            .into_iter()
            .map(|name| ComplexSpec::Catalog { name: name.to_string() })
            .collect(),
        primes: vec![2, 3, crate::field::DEFAULT_PRIME],
        seeds: vec![1],
        theorems: Vec::new(),
    }
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub observed: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub summary: SuiteSummary,
    pub results: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn has_fail(&self) -> bool {
        self.summary.fail > 0
    }
}

/// Runs the full cross product of complexes, primes, seeds, and
/// theorems. Items run in parallel (HVEC_THREADS caps the pool) but
/// the report order is the deterministic cross-product order.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let theorems: Vec<TheoremId> = if config.theorems.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        config
            .theorems
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_>>()?
    };
    let fields: Vec<PrimeField> = config
        .primes
        .iter()
        .map(|&p| PrimeField::new(p))
        .collect::<Result<_>>()?;
    let built: Vec<(String, SimplicialComplex)> = config
        .complexes
        .iter()
        .map(|spec| Ok((spec.label(), spec.build()?)))
        .collect::<Result<_>>()?;

    let mut jobs = Vec::new();
    for (name, complex) in &built {
        for &field in &fields {
            for &seed in &config.seeds {
                for &id in &theorems {
                    jobs.push((id, name.as_str(), complex, field, seed));
                }
            }
        }
    }

    let run = || {
        jobs.par_iter()
            .map(|&(id, name, complex, field, seed)| verify(id, name, complex, field, seed))
            .collect::<Vec<_>>()
    };
    let pool = std::env::var("HVEC_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&k| k > 0)
        .and_then(|k| rayon::ThreadPoolBuilder::new().num_threads(k).build().ok());
    let results = match pool {
        Some(pool) => pool.install(run),
        None => run(),
    };

    let mut summary = SuiteSummary { total: results.len(), ..Default::default() };
    for r in &results {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::Observed => summary.observed += 1,
            Verdict::Skip => summary.skip += 1,
        }
    }
    Ok(SuiteReport { summary, results })
}

#[cfg(test)]
mod tests {
    use super::*;

    const BIG: u64 = crate::field::DEFAULT_PRIME;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn member(name: &str) -> SimplicialComplex {
        catalog::build(name).unwrap()
    }

    fn check(id: TheoremId, name: &str, p: u64) -> VerificationReport {
        verify(id, name, &member(name), f(p), 1)
    }

    #[test]
    fn registry_round_trips() {
        for id in TheoremId::ALL {
            assert_eq!(id.slug().parse::<TheoremId>().unwrap(), id);
        }
        assert!(matches!(
            "thm".parse::<TheoremId>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn hypothesis_gates_report_skip() {
        let r = check(TheoremId::Stanley, "bowtie", BIG);
        assert_eq!(r.verdict, Verdict::Skip);
        assert!(r.hypotheses.contains("cohen-macaulay"));
        let r = check(TheoremId::HsigmaBuchsbaum, "bowtie", BIG);
        assert_eq!(r.verdict, Verdict::Skip);
        let r = check(TheoremId::Suspension, "rp2_6", BIG);
        assert!(r.hypotheses.contains("not a suspension"));
        let r = check(TheoremId::Suspension, "susp_bowtie", BIG);
        assert!(r.hypotheses.contains("base is not buchsbaum"));
        let r = check(TheoremId::DehnSommerville, "empty", 2);
        assert_eq!(r.verdict, Verdict::Pass, "the empty complex is pure");
    }

    #[test]
    fn missing_parameter_systems_skip() {
        let r = check(TheoremId::TopEntry, "torus_7", 2);
        assert_eq!(r.verdict, Verdict::Skip);
        assert!(r.hypotheses.contains("no linear system of parameters"));
        let r = check(TheoremId::TopEntry, "torus_7", 3);
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn known_verdicts() {
        let r = check(TheoremId::HsigmaDminus1, "bowtie", BIG);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.lhs, json!(0));
        assert_eq!(r.rhs, json!(0));

        let r = check(TheoremId::Schenzel, "rp2_6", 2);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.lhs, json!([1, 3, 6, 1]));
        let r = check(TheoremId::Schenzel, "rp2_6", 3);
        assert_eq!(r.lhs, json!([1, 3, 6, 0]));

        let r = check(TheoremId::HsigmaBuchsbaum, "rp2_6", 2);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.lhs, json!([1, 3, 3, 1]));

        let r = check(TheoremId::Stanley, "boundary_simplex_3", 2);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.lhs, json!([1, 1, 1, 1]));
    }

    #[test]
    fn suspension_detection_and_relation() {
        assert!(suspension_base(&member("rp2_6")).is_none());
        assert!(suspension_base(&member("boundary_simplex_2")).is_none());
        let base = suspension_base(&member("susp_rp2_6")).unwrap();
        assert_eq!(base.f_vector(), member("rp2_6").f_vector());
        let base = suspension_base(&member("cycle_4")).unwrap();
        assert_eq!(base.f_vector(), vec![1, 2]);

        let r = check(TheoremId::Suspension, "susp_rp2_6", 2);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.lhs["reduction"], json!([1, 4, 9, 6, 1]));
        let r = check(TheoremId::Suspension, "cycle_4", BIG);
        assert_eq!(r.verdict, Verdict::Pass);
        let r = check(TheoremId::Suspension, "susp_torus_7", 3);
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn exploratory_checks_never_fail() {
        // The saturated quotient agrees with the conjectured formula in
        // low degrees and departs from it at the top on spheres; either
        // way the verdict stays observational.
        let r = check(TheoremId::TauConjecture, "boundary_simplex_3", BIG);
        assert_eq!(r.verdict, Verdict::Observed);
        assert_eq!(r.lhs, json!([1, 1, 1, 1]));
        assert_eq!(r.rhs, json!([1, 1, 1, 0]));

        let r = check(TheoremId::Symmetry, "cone_bowtie", BIG);
        assert_eq!(r.verdict, Verdict::Observed);
        assert_eq!(r.lhs, json!(0));
        assert_eq!(r.rhs, json!(10));
        let r = check(TheoremId::Symmetry, "rp2_6", 2);
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn small_field_mismatches_downgrade_to_observed() {
        // Over GF(2) every parameter system of the bowtie has the same
        // reduction, yet the minimal attainable multiplication kernel
        // (0) sits below the predicted generic value (1): no rational
        // system certifies the generic premise on both sides at once.
        // Over the large field the same check passes outright.
        let r = check(TheoremId::KernelDim, "bowtie", 2);
        assert_eq!(r.verdict, Verdict::Observed);
        assert!(r.hypotheses.contains("uncertified"));
        assert_eq!(r.lhs, json!([0, 0, 0]));
        assert_eq!(r.rhs, json!([0, 0, 1]));
        let r = check(TheoremId::KernelDim, "bowtie", BIG);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.lhs, json!([0, 0, 1]));
    }

    #[test]
    fn small_suite_runs_clean() {
        let config = SuiteConfig {
            complexes: vec![
                ComplexSpec::Catalog { name: "bowtie".into() },
                ComplexSpec::Catalog { name: "cycle_5".into() },
                ComplexSpec::RandomPure { n: 6, dim: 2, count: 5, seed: 9 },
            ],
            primes: vec![2, BIG],
            seeds: vec![1],
            theorems: vec!["top-entry".into(), "hsigma-dminus1".into(), "dehn-sommerville".into()],
        };
        let report = run_suite(&config).unwrap();
        assert_eq!(report.summary.total, 18);
        assert_eq!(report.summary.fail, 0);
        assert!(!report.has_fail());
        assert!(report.summary.pass >= 16);

        // Determinism modulo timing.
        let again = run_suite(&config).unwrap();
        for (a, b) in report.results.iter().zip(&again.results) {
            assert_eq!(a.theorem, b.theorem);
            assert_eq!(a.complex, b.complex);
            assert_eq!(a.lhs, b.lhs);
            assert_eq!(a.rhs, b.rhs);
            assert_eq!(
                serde_json::to_value(a.verdict).unwrap(),
                serde_json::to_value(b.verdict).unwrap()
            );
        }
    }

    #[test]
    fn config_errors_surface() {
        let config = SuiteConfig {
            complexes: vec![ComplexSpec::Catalog { name: "nonsense".into() }],
            primes: vec![BIG],
            seeds: vec![1],
            theorems: Vec::new(),
        };
        assert!(matches!(run_suite(&config), Err(Error::UnknownCatalog(_))));
        let config = SuiteConfig {
            complexes: vec![ComplexSpec::Catalog { name: "bowtie".into() }],
            primes: vec![10],
            seeds: vec![1],
            theorems: Vec::new(),
        };
        assert!(matches!(run_suite(&config), Err(Error::NotPrime(10))));
    }
}
