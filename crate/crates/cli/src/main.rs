//! Command-line front end. Every subcommand is a thin shell over
//! hvec-core: load a complex, run the requested computation, return
//! one report in the chosen format. Parallelism lives in the suite
//! runner inside the core crate (capped by HVEC_THREADS); everything
//! here is sequential.
//!
//! Exit codes: 0 success (and no FAIL verdict), 1 a verification
//! FAILed, 2 usage or parse error, 3 no linear system of parameters
//! could be found over the requested field.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hvec_core::cohomology::{is_buchsbaum, is_cohen_macaulay, reduced_betti};
use hvec_core::lsop::ThetaContext;
use hvec_core::verify::{
    default_config, run_suite, verify, SuiteConfig, SuiteReport, TheoremId, VerificationReport,
    Verdict,
};
use hvec_core::{catalog, io, Error, PrimeField, SimplicialComplex, DEFAULT_PRIME};

#[derive(Parser)]
#[command(
    name = "hvec",
    version,
    about = "Exact h-vectors of simplicial complexes over prime fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the combinatorial and algebraic vectors of one complex
    Analyze(AnalyzeArgs),
    /// Check one registered identity on one complex
    Verify(VerifyArgs),
    /// Run a batch of identity checks and summarize the verdicts
    Suite(SuiteArgs),
    /// Inspect the built-in complex collection
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Print every built-in complex with its dimensions and ring flags
    List {
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
}

/// Exactly one input source: a catalog name or a facet file.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Name of a built-in complex (see `catalog list`)
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
    /// Facet file: one facet per line, or JSON {"facets": [[..], ..]}
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
}

impl InputArgs {
    fn load(&self) -> Result<(String, SimplicialComplex), Error> {
        match (&self.catalog, &self.file) {
            (Some(name), None) => Ok((name.clone(), catalog::build(name)?)),
            (None, Some(path)) => {
                Ok((path.display().to_string(), io::load_path(path)?))
            }
            // clap's group guarantees exactly one source.
            _ => unreachable!(),
        }
    }
}

#[derive(Args)]
struct FieldArgs {
    /// Field characteristic: any prime below 2^63
    #[arg(long, default_value_t = DEFAULT_PRIME, value_name = "PRIME")]
    field: u64,
    /// Seed for the parameter draw; reports always echo it
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Csv,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    field: FieldArgs,
    /// Truncate the printed vectors above this degree
    #[arg(long, value_name = "DEGREE")]
    max_degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to check: stanley, schenzel, hsigma-buchsbaum,
    /// top-entry, hilbert-decomposition, kernel-dim, halg-dminus1,
    /// hsigma-dminus1, suspension, dehn-sommerville, symmetry, or
    /// tau-conjecture
    #[arg(long, value_name = "ID")]
    theorem: String,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

#[derive(Args)]
struct SuiteArgs {
    /// Path to a JSON suite config, or the word "default" for the
    /// whole catalog against p = 2, 3, 2147483647
    #[arg(long, default_value = "default", value_name = "PATH")]
    config: String,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match run(&cli) {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(failure_code(&e));
        }
    };
    // A closed pipe (e.g. `hvec ... | head`) is not an error worth
    // reporting; keep the verdict-derived code either way.
    if let Err(e) = std::io::stdout().lock().write_all(out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    code
}

fn run(cli: &Cli) -> Result<(String, ExitCode), Error> {
    match &cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Suite(args) => cmd_suite(args),
        Command::Catalog { command: CatalogCommand::List { format } } => cmd_catalog_list(*format),
    }
}

fn failure_code(e: &Error) -> u8 {
    match e {
        Error::LsopSearchExhausted { .. } | Error::NotLsop | Error::SaturationDivergence(_) => 3,
        _ => 2,
    }
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<(String, ExitCode), Error> {
    let field = PrimeField::new(args.field.field)?;
    let (name, complex) = args.input.load()?;

    let mut f = complex.f_vector();
    let mut h = complex.h_vector();
    let mut betti: Vec<i64> = match complex.dim() {
        Some(d) => (-1..=d).map(|k| reduced_betti(field, &complex, k) as i64).collect(),
        None => Vec::new(),
    };

    // The algebraic vectors need a parameter system, which the void
    // complex has no ring to draw from.
    let (mut h_alg, mut h_sigma, h_tau) = if complex.is_void() {
        (None, None, Err(Error::VoidComplex))
    } else {
        let mut theta = ThetaContext::from_seed(field, &complex, args.field.seed)?;
        let alg = theta.h_alg_vector();
        let sigma = theta.h_sigma_vector();
        let tau = theta.h_tau_vector();
        (Some(alg), Some(sigma), tau)
    };
    let mut h_tau = match h_tau {
        Ok(v) => TauReport::Vector(v),
        Err(e) => TauReport::Unavailable(e.to_string()),
    };

    if let Some(bound) = args.max_degree {
        f.truncate(bound + 1);
        h.truncate(bound + 1);
        betti.truncate(bound + 2); // starts at degree -1
        for v in [&mut h_alg, &mut h_sigma].into_iter().flatten() {
            v.truncate(bound + 1);
        }
        if let TauReport::Vector(v) = &mut h_tau {
            v.truncate(bound + 1);
        }
    }

    let buchsbaum = is_buchsbaum(field, &complex);
    let cohen_macaulay = is_cohen_macaulay(field, &complex);

    let mut out = String::new();
    match args.format {
        Format::Json => {
            let tau_value = match &h_tau {
                TauReport::Vector(v) => json!(v),
                TauReport::Unavailable(msg) => json!({ "error": msg }),
            };
            let report = json!({
                "complex": name,
                "p": field.modulus(),
                "seed": args.field.seed,
                "f": f,
                "h": h,
                "reduced_betti": betti,
                "reduced_betti_start_degree": -1,
                "h_alg": h_alg,
                "h_sigma": h_sigma,
                "h_tau_experimental": tau_value,
                "buchsbaum": buchsbaum,
                "cohen_macaulay": cohen_macaulay,
            });
            push_json(&mut out, &report);
        }
        Format::Markdown => {
            let _ = writeln!(out, "# {name}\n");
            kv_table(
                &mut out,
                &[
                    ("p", field.modulus().to_string()),
                    ("seed", args.field.seed.to_string()),
                    ("f", join_i64(&f)),
                    ("h", join_i64(&h)),
                    ("reduced betti (from degree -1)", join_i64(&betti)),
                    ("h_alg", opt_vec(&h_alg)),
                    ("h_sigma", opt_vec(&h_sigma)),
                    ("h_tau (experimental)", h_tau.display()),
                    ("buchsbaum", yes_no(buchsbaum)),
                    ("cohen-macaulay", yes_no(cohen_macaulay)),
                ],
            );
        }
        Format::Csv => {
            let _ = writeln!(out, "quantity,value");
            for (k, v) in [
                ("complex", name.clone()),
                ("p", field.modulus().to_string()),
                ("seed", args.field.seed.to_string()),
                ("f", join_i64(&f)),
                ("h", join_i64(&h)),
                ("reduced_betti_from_degree_-1", join_i64(&betti)),
                ("h_alg", opt_vec(&h_alg)),
                ("h_sigma", opt_vec(&h_sigma)),
                ("h_tau_experimental", h_tau.display()),
                ("buchsbaum", buchsbaum.to_string()),
                ("cohen_macaulay", cohen_macaulay.to_string()),
            ] {
                let _ = writeln!(out, "{},{}", k, csv_field(&v));
            }
        }
    }
    Ok((out, ExitCode::SUCCESS))
}

enum TauReport {
    Vector(Vec<i64>),
    Unavailable(String),
}

impl TauReport {
    fn display(&self) -> String {
        match self {
            TauReport::Vector(v) => join_i64(v),
            TauReport::Unavailable(msg) => format!("unavailable ({msg})"),
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, ExitCode), Error> {
    let field = PrimeField::new(args.field.field)?;
    let id = TheoremId::from_str(&args.theorem)?;
    let (name, complex) = args.input.load()?;
    let report = verify(id, &name, &complex, field, args.field.seed);

    let mut out = String::new();
    match args.format {
        Format::Json => {
            let value = serde_json::to_value(&report).expect("report serializes");
            push_json(&mut out, &value);
        }
        Format::Markdown => {
            let _ = writeln!(out, "# {} on {}\n", report.theorem, report.complex);
            kv_table(
                &mut out,
                &[
                    ("verdict", verdict_str(report.verdict).to_string()),
                    ("p", report.p.to_string()),
                    ("seed", report.seed.to_string()),
                    ("hypotheses", report.hypotheses.clone()),
                    ("lhs", report.lhs.to_string()),
                    ("rhs", report.rhs.to_string()),
                    ("wall_ms", report.wall_ms.to_string()),
                ],
            );
        }
        Format::Csv => {
            let _ = writeln!(out, "{}", REPORT_COLUMNS.join(","));
            let _ = writeln!(out, "{}", report_row(&report));
        }
    }
    Ok((out, exit_for_fail(report.verdict == Verdict::Fail)))
}

fn cmd_suite(args: &SuiteArgs) -> Result<(String, ExitCode), Error> {
    let config: SuiteConfig = if args.config == "default" {
        default_config()
    } else {
        serde_json::from_str(&std::fs::read_to_string(&args.config)?)?
    };
    let report = run_suite(&config)?;

    let mut out = String::new();
    match args.format {
        Format::Json => {
            let value = serde_json::to_value(&report).expect("report serializes");
            push_json(&mut out, &value);
        }
        Format::Markdown => suite_markdown(&mut out, &config, &report),
        Format::Csv => {
            let _ = writeln!(out, "{}", REPORT_COLUMNS.join(","));
            for r in &report.results {
                let _ = writeln!(out, "{}", report_row(r));
            }
        }
    }
    Ok((out, exit_for_fail(report.has_fail())))
}

fn suite_markdown(out: &mut String, config: &SuiteConfig, report: &SuiteReport) {
    let s = &report.summary;
    let _ = writeln!(out, "# suite\n");
    let _ = writeln!(out, "| total | pass | fail | observed | skip |");
    let _ = writeln!(out, "| --- | --- | --- | --- | --- |");
    let _ = writeln!(out, "| {} | {} | {} | {} | {} |", s.total, s.pass, s.fail, s.observed, s.skip);
    let primes: Vec<String> = config.primes.iter().map(u64::to_string).collect();
    let seeds: Vec<String> = config.seeds.iter().map(u64::to_string).collect();
    let theorems = if config.theorems.is_empty() {
        format!("all ({})", TheoremId::ALL.len())
    } else {
        config.theorems.join(", ")
    };
    let _ = writeln!(
        out,
        "\ncomplexes: {}; primes: {}; seeds: {}; theorems: {}",
        config.complexes.len(),
        primes.join(", "),
        seeds.join(", "),
        theorems
    );

    let attention: Vec<&VerificationReport> = report
        .results
        .iter()
        .filter(|r| matches!(r.verdict, Verdict::Fail | Verdict::Observed))
        .collect();
    let _ = writeln!(out, "\n## FAIL and OBSERVED rows\n");
    if attention.is_empty() {
        let _ = writeln!(out, "none");
        return;
    }
    let _ = writeln!(out, "| theorem | complex | p | seed | verdict | hypotheses | lhs | rhs |");
    let _ = writeln!(out, "| --- | --- | --- | --- | --- | --- | --- | --- |");
    for r in attention {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            r.theorem,
            r.complex,
            r.p,
            r.seed,
            verdict_str(r.verdict),
            r.hypotheses,
            r.lhs,
            r.rhs
        );
    }
}

fn cmd_catalog_list(format: Format) -> Result<(String, ExitCode), Error> {
    let primes = [2, 3, DEFAULT_PRIME];
    let fields: Vec<PrimeField> = primes
        .iter()
        .map(|&p| PrimeField::new(p).expect("catalog primes are prime"))
        .collect();

    struct Row {
        name: &'static str,
        summary: &'static str,
        dim: i32,
        vertices: usize,
        facets: usize,
        pure: bool,
        buchsbaum: Vec<bool>,
        cohen_macaulay: Vec<bool>,
    }

    let mut rows = Vec::new();
    for entry in catalog::ENTRIES {
        let complex = catalog::build(entry.name)?;
        rows.push(Row {
            name: entry.name,
            summary: entry.summary,
            dim: complex.dim().expect("catalog members are not void"),
            vertices: complex.n_vertices(),
            facets: complex.facets().len(),
            pure: complex.is_pure(),
            buchsbaum: fields.iter().map(|&f| is_buchsbaum(f, &complex)).collect(),
            cohen_macaulay: fields.iter().map(|&f| is_cohen_macaulay(f, &complex)).collect(),
        });
    }

    let flag_cells = |flags: &[bool]| {
        flags.iter().map(|&b| if b { "y" } else { "n" }).collect::<Vec<_>>().join(" ")
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let per_prime = |flags: &[bool]| -> Value {
                        primes
                            .iter()
                            .zip(flags)
                            .map(|(p, &b)| (p.to_string(), Value::Bool(b)))
                            .collect::<serde_json::Map<String, Value>>()
                            .into()
                    };
                    json!({
                        "name": r.name,
                        "summary": r.summary,
                        "dim": r.dim,
                        "vertices": r.vertices,
                        "facets": r.facets,
                        "pure": r.pure,
                        "buchsbaum": per_prime(&r.buchsbaum),
                        "cohen_macaulay": per_prime(&r.cohen_macaulay),
                    })
                })
                .collect();
            push_json(&mut out, &json!(items));
        }
        Format::Markdown => {
            let _ = writeln!(out, "| name | dim | vertices | facets | pure | buchsbaum (p=2 3 {DEFAULT_PRIME}) | cohen-macaulay (p=2 3 {DEFAULT_PRIME}) | summary |");
            let _ = writeln!(out, "| --- | --- | --- | --- | --- | --- | --- | --- |");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.name,
                    r.dim,
                    r.vertices,
                    r.facets,
                    yes_no(r.pure),
                    flag_cells(&r.buchsbaum),
                    flag_cells(&r.cohen_macaulay),
                    r.summary
                );
            }
        }
        Format::Csv => {
            let _ = writeln!(out, "name,dim,vertices,facets,pure,bb_2,bb_3,bb_{DEFAULT_PRIME},cm_2,cm_3,cm_{DEFAULT_PRIME},summary");
            for r in &rows {
                let flags: Vec<String> = r
                    .buchsbaum
                    .iter()
                    .chain(&r.cohen_macaulay)
                    .map(bool::to_string)
                    .collect();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.name,
                    r.dim,
                    r.vertices,
                    r.facets,
                    r.pure,
                    flags.join(","),
                    csv_field(r.summary)
                );
            }
        }
    }
    Ok((out, ExitCode::SUCCESS))
}

const REPORT_COLUMNS: [&str; 9] =
    ["theorem", "complex", "p", "seed", "verdict", "hypotheses", "lhs", "rhs", "wall_ms"];

fn report_row(r: &VerificationReport) -> String {
    [
        csv_field(&r.theorem),
        csv_field(&r.complex),
        r.p.to_string(),
        r.seed.to_string(),
        verdict_str(r.verdict).to_string(),
        csv_field(&r.hypotheses),
        csv_field(&r.lhs.to_string()),
        csv_field(&r.rhs.to_string()),
        r.wall_ms.to_string(),
    ]
    .join(",")
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Observed => "OBSERVED",
        Verdict::Skip => "SKIP",
    }
}

fn exit_for_fail(failed: bool) -> ExitCode {
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn push_json(out: &mut String, value: &Value) {
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("value serializes")
    );
}

fn kv_table(out: &mut String, rows: &[(&str, String)]) {
    let _ = writeln!(out, "| quantity | value |\n| --- | --- |");
    for (k, v) in rows {
        let _ = writeln!(out, "| {k} | {v} |");
    }
}

fn join_i64(v: &[i64]) -> String {
    if v.is_empty() {
        return "(none)".to_string();
    }
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
}

fn opt_vec(v: &Option<Vec<i64>>) -> String {
    match v {
        Some(v) => join_i64(v),
        None => "n/a (void complex)".to_string(),
    }
}

fn yes_no(b: bool) -> String {
    (if b { "yes" } else { "no" }).to_string()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
