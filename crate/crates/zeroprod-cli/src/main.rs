//! Command-line front end: load or construct algebras, run the ring
//! predicates, the classification pipeline, the brute-force oracle and the
//! Lie cross-check, and emit deterministic JSON or text reports.
//!
//! Exit codes: 0 success, 1 validation failure (including malformed input),
//! 2 hypothesis gate, 3 budget refusal.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zeroprod::classify::{
    classify_max_zero_product, ClassificationReport, ClassifyOptions, OraclePolicy,
    DEFAULT_BUDGET_ELEMENTS, DEFAULT_BUDGET_SUBSPACES,
};
use zeroprod::lie::{cross_check, LieReport};
use zeroprod::linalg::count_subspaces;
use zeroprod::oracle::{oracle_max_zero_product, randomized_max_zero_product};
use zeroprod::{Algebra, Error, RawAlgebra, Subspace};

#[derive(Parser)]
#[command(name = "zeroprod", version)]
#[command(
    about = "Annihilator lattices and maximal zero-product subsets of finite algebras over GF(p)"
)]
struct Cli {
    /// Cap on subspace enumerations (oracle and generic ideal search)
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET_SUBSPACES)]
    budget_subspaces: u64,

    /// Cap on element-exhaustive sweeps (p^dim)
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET_ELEMENTS)]
    budget_elements: u64,

    /// PRNG seed for the randomized oracle (decimal or 0x-prefixed hex)
    #[arg(long, global = true, value_parser = parse_seed, default_value = "0xA117")]
    seed: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra description for structural validity
    Validate { input: String },
    /// Report the ring predicates (simple, prime, semiprime, core, nilpotents)
    Analyze { input: String },
    /// Classify all maximal zero-product subsets
    Classify {
        input: String,
        /// Run the cross-checking oracle (the default)
        #[arg(long, conflicts_with = "no_oracle")]
        oracle: bool,
        /// Skip the cross-checking oracle
        #[arg(long)]
        no_oracle: bool,
    },
    /// Run only the brute-force oracle
    Oracle { input: String },
    /// Classify and cross-check against the Lie inner-ideal view (needs p >= 5)
    Lie { input: String },
    /// Print the matrix algebra M_n(F_p) in the JSON schema
    Matrix { n: usize, p: u64 },
}

/// Inputs are either a JSON algebra file or a builtin spec "mat:n:p" / "ut:n:p".
fn load_algebra(input: &str) -> Result<Algebra, Error> {
    if let Some(spec) = parse_builtin(input) {
        return spec;
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| Error::Validation(format!("cannot read {input}: {e}")))?;
    Algebra::from_json(&text)
}

fn parse_builtin(input: &str) -> Option<Result<Algebra, Error>> {
    let mk = |ctor: fn(usize, u64) -> Result<Algebra, Error>, rest: &str| {
        let (n, p) = rest.split_once(':')?;
        let n: usize = n.parse().ok()?;
        let p: u64 = p.parse().ok()?;
        Some(ctor(n, p))
    };
    if let Some(rest) = input.strip_prefix("mat:") {
        return mk(Algebra::matrix, rest).or(Some(Err(Error::Validation(format!(
            "malformed builtin spec {input}"
        )))));
    }
    if let Some(rest) = input.strip_prefix("ut:") {
        return mk(Algebra::upper_triangular, rest).or(Some(Err(Error::Validation(format!(
            "malformed builtin spec {input}"
        )))));
    }
    None
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        u64::from_str_radix(hex, 16)
    } else {
        s.parse()
    };
    parsed.map_err(|_| format!("invalid seed {s:?} (decimal or 0x-prefixed hex)"))
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Hypothesis(_) | Error::Characteristic(_) => 2,
        Error::ElementBudget { .. } | Error::SubspaceBudget { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Validate { input } => cmd_validate(cli, input),
        Command::Analyze { input } => cmd_analyze(cli, input),
        Command::Classify {
            input, no_oracle, ..
        } => cmd_classify(cli, input, *no_oracle),
        Command::Oracle { input } => cmd_oracle(cli, input),
        Command::Lie { input } => cmd_lie(cli, input),
        Command::Matrix { n, p } => cmd_matrix(cli, *n, *p),
    }
}

fn options(cli: &Cli, oracle: OraclePolicy) -> ClassifyOptions {
    ClassifyOptions {
        budget_subspaces: cli.budget_subspaces,
        budget_elements: cli.budget_elements,
        seed: cli.seed,
        oracle,
        ..ClassifyOptions::default()
    }
}

fn emit(cli: &Cli, text: String) -> Result<(), Error> {
    let text = if text.ends_with('\n') {
        text
    } else {
        text + "\n"
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// JSON report shapes (field order is the wire contract)
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ValidateJson {
    algebra: String,
    valid: bool,
    violation: Option<String>,
}

#[derive(Serialize)]
struct AnalyzeJson {
    algebra: String,
    simple: bool,
    prime: bool,
    semiprime: bool,
    core_dim: usize,
    nilpotent_witness: Option<String>,
    semiprime_witness: Option<String>,
}

#[derive(Serialize)]
struct HypothesesJson {
    prime: bool,
    core_nonzero: bool,
    has_nilpotent: bool,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct EntryJson {
    S_basis: Vec<Vec<u64>>,
    R_basis: Vec<Vec<u64>>,
    L_basis: Vec<Vec<u64>>,
    dim_S: usize,
}

#[derive(Serialize)]
struct OracleJson {
    ran: bool,
    agrees: bool,
    mode: Option<&'static str>,
    seed: u64,
}

#[derive(Serialize)]
struct LieJson {
    checked: bool,
    all_abelian_inner: bool,
    unital_obstruction_found: bool,
}

#[derive(Serialize)]
struct ReportJson {
    algebra: String,
    hypotheses: HypothesesJson,
    count: usize,
    entries: Vec<EntryJson>,
    oracle: OracleJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    lie: Option<LieJson>,
}

#[derive(Serialize)]
struct SubspaceJson {
    basis: Vec<Vec<u64>>,
    dim: usize,
}

#[derive(Serialize)]
struct OracleReportJson {
    algebra: String,
    mode: &'static str,
    seed: u64,
    count: usize,
    subspaces: Vec<SubspaceJson>,
}

fn basis_rows(s: &Subspace) -> Vec<Vec<u64>> {
    s.basis().row_vecs()
}

fn report_json(name: &str, report: &ClassificationReport, lie: Option<&LieReport>) -> ReportJson {
    ReportJson {
        algebra: name.to_string(),
        hypotheses: HypothesesJson {
            prime: report.hypotheses.prime,
            core_nonzero: report.hypotheses.core_nonzero,
            has_nilpotent: report.hypotheses.has_nilpotent,
        },
        count: report.entries.len(),
        entries: report
            .entries
            .iter()
            .map(|e| EntryJson {
                S_basis: basis_rows(&e.subset),
                R_basis: basis_rows(&e.right),
                L_basis: basis_rows(&e.left),
                dim_S: e.subset.dim(),
            })
            .collect(),
        oracle: OracleJson {
            ran: report.oracle.ran,
            agrees: report.oracle.agrees,
            mode: report.oracle.mode.map(|m| m.as_str()),
            seed: report.oracle.seed,
        },
        lie: lie.map(|l| LieJson {
            checked: l.checked,
            all_abelian_inner: l.all_abelian_inner,
            unital_obstruction_found: l.unital_obstruction_found,
        }),
    }
}

fn header_text(name: &str, alg: &Algebra) -> String {
    format!(
        "algebra: {name} (p={}, dim={})\nbasis: {}\n",
        alg.p(),
        alg.dim(),
        alg.basis_names().join(" ")
    )
}

fn report_text(
    name: &str,
    alg: &Algebra,
    report: &ClassificationReport,
    lie: Option<&LieReport>,
) -> String {
    let mut out = header_text(name, alg);
    let h = &report.hypotheses;
    out += &format!(
        "hypotheses: prime={} core_nonzero={} has_nilpotent={}\n",
        h.prime, h.core_nonzero, h.has_nilpotent
    );
    out += &format!("maximal zero-product subspaces: {}\n", report.entries.len());
    for (i, e) in report.entries.iter().enumerate() {
        out += &format!("entry {}: dim {}\n", i + 1, e.subset.dim());
        out += &format!("  S: {}\n  R: {}\n  L: {}\n", e.subset, e.right, e.left);
    }
    let o = &report.oracle;
    out += &format!(
        "oracle: ran={} mode={} seed={} agrees={}\n",
        o.ran,
        o.mode.map(|m| m.as_str()).unwrap_or("none"),
        o.seed,
        o.agrees
    );
    if let Some(l) = lie {
        out += &format!(
            "lie: checked={} all_abelian_inner={} unital_obstruction_found={}\n",
            l.checked, l.all_abelian_inner, l.unital_obstruction_found
        );
    }
    out
}

fn to_pretty(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_validate(cli: &Cli, input: &str) -> Result<ExitCode, Error> {
    let raw: RawAlgebra = if let Some(builtin) = parse_builtin(input) {
        builtin?.to_raw()
    } else {
        let text = std::fs::read_to_string(input)
            .map_err(|e| Error::Validation(format!("cannot read {input}: {e}")))?;
        serde_json::from_str(&text)?
    };
    let violation = raw.validate().map(|v| v.to_string());
    let valid = violation.is_none();
    let rendered = match cli.format {
        Format::Json => to_pretty(&ValidateJson {
            algebra: input.to_string(),
            valid,
            violation,
        }),
        Format::Text => match &violation {
            None => format!("algebra: {input}\nvalid: true"),
            Some(v) => format!("algebra: {input}\nvalid: false\nviolation: {v}"),
        },
    };
    emit(cli, rendered)?;
    Ok(if valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_analyze(cli: &Cli, input: &str) -> Result<ExitCode, Error> {
    let alg = load_algebra(input)?;
    let budget = cli.budget_elements;
    let simple = alg.is_simple(budget)?;
    let semiprime_witness = alg.semiprime_witness(budget)?;
    let prime = alg.is_prime(budget)?;
    let core = alg.core(budget)?;
    let nilpotent_witness = alg.nilpotent_witness(budget)?;
    let rendered = match cli.format {
        Format::Json => to_pretty(&AnalyzeJson {
            algebra: input.to_string(),
            simple,
            prime,
            semiprime: semiprime_witness.is_none(),
            core_dim: core.dim(),
            nilpotent_witness: nilpotent_witness.as_ref().map(|w| alg.format_element(w)),
            semiprime_witness: semiprime_witness.as_ref().map(|w| alg.format_element(w)),
        }),
        Format::Text => {
            let mut out = header_text(input, &alg);
            out += &format!("simple: {simple}\nprime: {prime}\n");
            out += &format!("semiprime: {}\n", semiprime_witness.is_none());
            out += &format!("core_dim: {}\n", core.dim());
            out += &format!(
                "nilpotent_witness: {}\n",
                nilpotent_witness
                    .as_ref()
                    .map(|w| alg.format_element(w))
                    .unwrap_or("none".into())
            );
            out += &format!(
                "semiprime_witness: {}\n",
                semiprime_witness
                    .as_ref()
                    .map(|w| alg.format_element(w))
                    .unwrap_or("none".into())
            );
            out
        }
    };
    emit(cli, rendered)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(cli: &Cli, input: &str, no_oracle: bool) -> Result<ExitCode, Error> {
    let alg = load_algebra(input)?;
    let policy = if no_oracle {
        OraclePolicy::Skip
    } else {
        OraclePolicy::Run
    };
    let report = classify_max_zero_product(&alg, &options(cli, policy))?;
    let rendered = match cli.format {
        Format::Json => to_pretty(&report_json(input, &report, None)),
        Format::Text => report_text(input, &alg, &report, None),
    };
    emit(cli, rendered)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(cli: &Cli, input: &str) -> Result<ExitCode, Error> {
    let alg = load_algebra(input)?;
    let exhaustive = count_subspaces(alg.dim(), alg.p()) <= cli.budget_subspaces as u128;
    let (mode, found) = if exhaustive {
        (
            "exhaustive",
            oracle_max_zero_product(&alg, cli.budget_subspaces)?,
        )
    } else {
        let walks = ClassifyOptions::default().randomized_walks;
        (
            "randomized",
            randomized_max_zero_product(&alg, cli.budget_elements, cli.seed, walks)?,
        )
    };
    let rendered = match cli.format {
        Format::Json => to_pretty(&OracleReportJson {
            algebra: input.to_string(),
            mode,
            seed: cli.seed,
            count: found.len(),
            subspaces: found
                .iter()
                .map(|s| SubspaceJson {
                    basis: basis_rows(s),
                    dim: s.dim(),
                })
                .collect(),
        }),
        Format::Text => {
            let mut out = header_text(input, &alg);
            out += &format!("oracle: mode={mode} seed={}\n", cli.seed);
            out += &format!("maximal zero-product subspaces: {}\n", found.len());
            for s in &found {
                out += &format!("  [dim {}] {}\n", s.dim(), s);
            }
            out
        }
    };
    emit(cli, rendered)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_lie(cli: &Cli, input: &str) -> Result<ExitCode, Error> {
    let alg = load_algebra(input)?;
    let (report, lie) = cross_check(&alg, &options(cli, OraclePolicy::Run))?;
    let rendered = match cli.format {
        Format::Json => to_pretty(&report_json(input, &report, Some(&lie))),
        Format::Text => report_text(input, &alg, &report, Some(&lie)),
    };
    emit(cli, rendered)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_matrix(cli: &Cli, n: usize, p: u64) -> Result<ExitCode, Error> {
    let alg = Algebra::matrix(n, p)?;
    emit(cli, alg.to_json())?;
    Ok(ExitCode::SUCCESS)
}
