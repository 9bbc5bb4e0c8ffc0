//! Command-line front end.
//!
//! Five subcommands cover the whole pipeline: `validate` and `analyze`
//! work on algebra files, `catalog` exports built-in algebras, `verify`
//! runs the claim suite over deterministic corpora, and `search` probes
//! for non-solvable algebras with trivial-section maximal subalgebras.
//!
//! Exit codes: 0 on success/pass, 1 on verification failure (failed
//! claims, Jacobi violations, internal cross-check anomalies), 2 on
//! usage or capability errors. All randomness flows from `--seed`;
//! reports are byte-identical across runs and worker counts except for
//! the timing field.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::catalog;
use crate::error::{Error, Result};
use crate::format::{load_str, save_string, sha256_hex};
use crate::maximal::maximal_subalgebras;
use crate::report::{ClaimRecord, FindingRecord, MaximalRecord, ReportFile};
use crate::scalar::FieldSpec;
use crate::section::analyze_maximal;
use crate::subspace::Subspace;
use crate::verify::{
    rational_catalog_targets, search_counterexample, verify, ClaimId, VerifyTarget,
};

/// Exact computation with Lie algebras: sections of maximal subalgebras,
/// c-ideals, and solvability criteria.
#[derive(Parser, Debug)]
#[command(name = "liesec", version, disable_help_subcommand = true)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores). Output
    /// is identical regardless of this setting.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an algebra file: schema, canonical scalars, and the Jacobi
    /// identity. Violations are printed with full diagnostics.
    Validate {
        /// Path to the algebra file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Analyze maximal subalgebras of the algebra in a file: core,
    /// section, c-index, ideal index, primitivity type, c-ideal status.
    Analyze {
        /// Path to the algebra file.
        #[arg(long)]
        input: PathBuf,

        /// Subalgebra to analyze, as basis rows of coefficients in the
        /// algebra's basis: scalars space-separated, rows
        /// semicolon-separated (e.g. "1 0 0; 0 1 0"). Maximality is
        /// re-certified before analysis.
        #[arg(long, conflicts_with = "enumerate")]
        maximal: Option<String>,

        /// Enumerate and analyze every maximal subalgebra (finite
        /// fields only).
        #[arg(long)]
        enumerate: bool,

        #[command(flatten)]
        budget: BudgetArg,

        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a built-in algebra (e.g. "sl2", "gejn(2)",
    /// "direct_sum(sl2,r2)") to the JSON file format.
    Catalog {
        /// Catalog expression.
        name: String,

        #[command(flatten)]
        field: FieldArg,

        /// Write the algebra file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the claim verification suite over a deterministic corpus.
    Verify {
        /// Claims to check: "all" or a comma-separated list of claim
        /// ids (e.g. "lemma2_ii,thm_trivial_i").
        #[arg(long, default_value = "all")]
        suite: String,

        #[command(flatten)]
        field: FieldArg,

        #[command(flatten)]
        corpus: CorpusArgs,

        #[command(flatten)]
        budget: BudgetArg,

        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search a corpus for non-solvable algebras in which some maximal
    /// subalgebra has a trivial section (sharpness probe; findings are
    /// reported, not treated as failures).
    Search {
        #[command(flatten)]
        field: FieldArg,

        #[command(flatten)]
        corpus: CorpusArgs,

        #[command(flatten)]
        budget: BudgetArg,

        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum FieldName {
    Q,
    Gf2,
    Gf3,
    Gf5,
    Gf7,
}

impl FieldName {
    fn spec(self) -> FieldSpec {
        match self {
            FieldName::Q => FieldSpec::Rationals,
            FieldName::Gf2 => FieldSpec::PrimeField(2),
            FieldName::Gf3 => FieldSpec::PrimeField(3),
            FieldName::Gf5 => FieldSpec::PrimeField(5),
            FieldName::Gf7 => FieldSpec::PrimeField(7),
        }
    }

    fn name(self) -> &'static str {
        match self {
            FieldName::Q => "q",
            FieldName::Gf2 => "gf2",
            FieldName::Gf3 => "gf3",
            FieldName::Gf5 => "gf5",
            FieldName::Gf7 => "gf7",
        }
    }
}

#[derive(Args, Debug)]
struct FieldArg {
    /// Scalar field.
    #[arg(long, value_enum, default_value = "gf2")]
    field: FieldName,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// Largest algebra dimension to generate.
    #[arg(long, default_value_t = 4)]
    max_dim: usize,

    /// PRNG seed; the sole source of randomness.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Target number of distinct algebras per sampling configuration.
    #[arg(long, default_value_t = 6)]
    target_count: usize,
}

#[derive(Args, Debug)]
struct BudgetArg {
    /// Upper bound on enumeration sizes (subspaces, field tuples).
    #[arg(long, default_value_t = 1 << 20)]
    budget: u64,
}

/// Entry point for the `liesec` binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Ignore failure: the global pool can only be set once (tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Validate { input } => cmd_validate(&input),
        Command::Analyze {
            input,
            maximal,
            enumerate,
            budget,
            out,
        } => cmd_analyze(&input, maximal.as_deref(), enumerate, budget.budget, out),
        Command::Catalog { name, field, out } => cmd_catalog(&name, field.field, out),
        Command::Verify {
            suite,
            field,
            corpus,
            budget,
            out,
        } => cmd_verify(&suite, field.field, &corpus, budget.budget, out),
        Command::Search {
            field,
            corpus,
            budget,
            out,
        } => cmd_search(field.field, &corpus, budget.budget, out),
    }
}

fn cmd_validate(input: &PathBuf) -> Result<i32> {
    let bytes = fs::read(input)?;
    let text = String::from_utf8(bytes).map_err(|_| Error::InvalidInput {
        detail: "algebra file is not UTF-8".to_string(),
    })?;
    let l = load_str(&text)?;
    let violations = l.validate();
    if violations.is_empty() {
        println!(
            "ok: dimension {} over {}, {} nonzero brackets",
            l.dim,
            field_display(l.field),
            l.structure_constants().len()
        );
        Ok(0)
    } else {
        for v in &violations {
            let residual: Vec<String> =
                v.residual.iter().map(|x| l.field.format_scalar(x)).collect();
            println!(
                "jacobi violation at basis indices ({}, {}, {}): residual [{}]",
                v.i,
                v.j,
                v.k,
                residual.join(" ")
            );
        }
        println!("invalid: {} violation(s)", violations.len());
        Ok(1)
    }
}

fn cmd_analyze(
    input: &PathBuf,
    maximal: Option<&str>,
    enumerate: bool,
    budget: u64,
    out: Option<PathBuf>,
) -> Result<i32> {
    let start = Instant::now();
    let bytes = fs::read(input)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::InvalidInput {
        detail: "algebra file is not UTF-8".to_string(),
    })?;
    let l = load_str(&text)?;
    let violations = l.validate();
    if !violations.is_empty() {
        return Err(Error::VerificationFailure {
            detail: format!(
                "algebra file fails the Jacobi identity ({} violations); run `validate` for \
                 diagnostics",
                violations.len()
            ),
        });
    }

    let candidates: Vec<Subspace> = match (maximal, enumerate) {
        (Some(rows), false) => vec![parse_subspace(&l, rows)?],
        (None, true) => maximal_subalgebras(&l, budget)?,
        (None, false) => {
            return Err(Error::InvalidInput {
                detail: "pass --maximal <rows> or --enumerate".to_string(),
            });
        }
        (Some(_), true) => unreachable!("clap conflicts_with"),
    };

    let mut parameters = BTreeMap::new();
    parameters.insert("budget".to_string(), budget.to_string());
    parameters.insert(
        "mode".to_string(),
        if enumerate { "enumerate" } else { "maximal" }.to_string(),
    );
    let mut report = ReportFile::new("analyze", parameters);
    report.input_digest = Some(sha256_hex(&bytes));

    let mut summary = String::new();
    for m in &candidates {
        let r = analyze_maximal(&l, m, budget)?;
        let _ = writeln!(
            summary,
            "maximal of dim {}: type {}, c-index {}, ideal index {}, c-ideal: {}, section dim \
             {} (solvable: {}, nil: {})",
            r.m.dim(),
            r.prim_type,
            r.c_index,
            r.ideal_index,
            r.is_c_ideal,
            r.sec.dim,
            r.sec_flags.solvable,
            r.sec_flags.nil,
        );
        report.maximal_reports.push(MaximalRecord::from_report(&l, &r));
    }
    report.timing_ms = start.elapsed().as_millis() as u64;
    print!("{summary}");
    emit(&report, out)?;
    Ok(0)
}

fn cmd_catalog(name: &str, field: FieldName, out: Option<PathBuf>) -> Result<i32> {
    let entry = catalog(field.spec(), name)?;
    let text = save_string(&entry.algebra);
    println!(
        "{}: dimension {} over {}, {} declared maximal subalgebra(s)",
        entry.name,
        entry.algebra.dim,
        field_display(entry.algebra.field),
        entry.declared_maximals.len()
    );
    for p in &entry.declared_properties {
        println!("property: {p}");
    }
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_verify(
    suite: &str,
    field: FieldName,
    corpus: &CorpusArgs,
    budget: u64,
    out: Option<PathBuf>,
) -> Result<i32> {
    let start = Instant::now();
    let claims: Vec<ClaimId> = if suite == "all" {
        ClaimId::ALL.to_vec()
    } else {
        suite
            .split(',')
            .map(|s| ClaimId::parse(s.trim()))
            .collect::<Result<_>>()?
    };

    let mut warnings = Vec::new();
    let targets: Vec<VerifyTarget> = match field.spec() {
        FieldSpec::Rationals => rational_catalog_targets()?,
        spec @ FieldSpec::PrimeField(_) => {
            let c = crate::corpus::standard_corpus(
                spec,
                corpus.seed,
                corpus.max_dim,
                corpus.target_count,
            )?;
            warnings.extend(c.warnings.iter().cloned());
            VerifyTarget::from_corpus(&c)
        }
    };

    let outcomes = verify(&claims, &targets, budget);

    let mut report = ReportFile::new("verify", verify_parameters(suite, field, corpus, budget));
    report.parameters.insert(
        "target_algebras".to_string(),
        targets.len().to_string(),
    );
    report.claims = outcomes.iter().map(ClaimRecord::from).collect();
    report.warnings = warnings;
    report.timing_ms = start.elapsed().as_millis() as u64;

    for c in &report.claims {
        let detail = match c.status.as_str() {
            "skipped" => format!(
                "skipped ({})",
                c.skip_reason.as_deref().unwrap_or("no reason")
            ),
            s => format!("{s} ({} instances)", c.instances_checked),
        };
        println!("{}: {}", c.claim, detail);
        for v in &c.violations {
            println!("  violation in {}: {}", v.algebra, v.witness);
        }
    }
    let pass = report.all_claims_pass();
    emit(&report, out)?;
    Ok(if pass { 0 } else { 1 })
}

fn cmd_search(
    field: FieldName,
    corpus: &CorpusArgs,
    budget: u64,
    out: Option<PathBuf>,
) -> Result<i32> {
    let start = Instant::now();
    let spec = field.spec();
    let outcome = search_counterexample(spec, corpus.max_dim, corpus.seed, corpus.target_count, budget)?;

    // Findings are reported against their own ambient algebras; rebuild
    // the corpus index to render subspace rows exactly.
    let c = crate::corpus::standard_corpus(spec, corpus.seed, corpus.max_dim, corpus.target_count)?;
    let mut report = ReportFile::new("search", verify_parameters("-", field, corpus, budget));
    report.parameters.remove("suite");
    for f in &outcome.findings {
        let ambient = c
            .algebras
            .iter()
            .find(|l| l.provenance.as_deref() == Some(f.algebra.as_str()))
            .ok_or_else(|| Error::Anomaly {
                detail: "search finding references an algebra outside its own corpus".to_string(),
            })?;
        report.findings.push(FindingRecord::from_finding(ambient, f));
    }
    report.warnings = outcome.warnings.clone();
    report.timing_ms = start.elapsed().as_millis() as u64;

    println!(
        "scanned {} algebras ({} non-solvable): {} finding(s)",
        outcome.algebras_scanned,
        outcome.non_solvable_count,
        outcome.findings.len()
    );
    for f in &outcome.findings {
        println!(
            "finding: {} (dim {}) has {} maximal subalgebra(s) with trivial section",
            f.algebra,
            f.dim,
            f.trivial_maximals.len()
        );
    }
    emit(&report, out)?;
    Ok(0)
}

fn verify_parameters(
    suite: &str,
    field: FieldName,
    corpus: &CorpusArgs,
    budget: u64,
) -> BTreeMap<String, String> {
    let mut p = BTreeMap::new();
    p.insert("suite".to_string(), suite.to_string());
    p.insert("field".to_string(), field.name().to_string());
    p.insert("max_dim".to_string(), corpus.max_dim.to_string());
    p.insert("seed".to_string(), corpus.seed.to_string());
    p.insert("target_count".to_string(), corpus.target_count.to_string());
    p.insert("budget".to_string(), budget.to_string());
    p
}

/// Parses "--maximal" rows: scalars space-separated, rows
/// semicolon-separated, coefficients in the ambient basis.
fn parse_subspace(l: &crate::algebra::LieAlgebra, rows: &str) -> Result<Subspace> {
    let mut parsed = Vec::new();
    for row in rows.split(';') {
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != l.dim {
            return Err(Error::InvalidInput {
                detail: format!(
                    "subspace row has {} entries; the algebra has dimension {}",
                    entries.len(),
                    l.dim
                ),
            });
        }
        let coords: Result<Vec<_>> =
            entries.iter().map(|s| l.field.parse_scalar(s)).collect();
        parsed.push(coords?);
    }
    Ok(Subspace::from_rows(l.field, l.dim, parsed))
}

fn field_display(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rationals => "Q".to_string(),
        FieldSpec::PrimeField(p) => format!("GF({p})"),
    }
}

fn emit(report: &ReportFile, out: Option<PathBuf>) -> Result<()> {
    let text = report.to_json_string();
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
