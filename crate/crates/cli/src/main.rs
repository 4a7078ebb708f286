//! `dsing`: singularity of Cayley graphs of cyclic and dihedral groups.
//!
//! Exit codes: 0 nonsingular / success, 10 singular (`check` only),
//! 2 verification disagreement (`verify` only), 64 usage errors,
//! 65 parse/validation errors, 74 I/O errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use dsing_core::census::{census, default_census_bound, subset_count, verify, CensusRow};
use dsing_core::group::GroupKind;
use dsing_core::report::{check, spectrum, SingularityReport, SpectrumReport};
use dsing_core::settext::parse_set;

const EXIT_SINGULAR: u8 = 10;
const EXIT_DISAGREEMENT: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(
    name = "dsing",
    version,
    about = "Exact singularity tests for Cayley graphs of cyclic and dihedral groups",
    after_help = "Set grammar: cyclic sets are rotation exponents \"k1,k2,...\" (a^k); dihedral \
                  sets are \"r:k1,...;f:j1,...\" with rotation exponents after r: and reflection \
                  exponents after f: (a^j b), either segment omissible. Whitespace is ignored."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Cyclic,
    Dihedral,
}

impl From<KindArg> for GroupKind {
    fn from(kind: KindArg) -> GroupKind {
        match kind {
            KindArg::Cyclic => GroupKind::Cyclic,
            KindArg::Dihedral => GroupKind::Dihedral,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide singularity of one Cayley graph by cyclotomic divisibility
    Check {
        kind: KindArg,
        /// Rotation order n (the graph has n or 2n vertices)
        n: u64,
        /// Connecting set in text form
        set: String,
        /// Cross-check the verdict against the exact determinant oracle
        #[arg(long)]
        oracle: bool,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
        /// Admit sets that do not generate the group
        #[arg(long)]
        allow_nongenerating: bool,
    },
    /// Enumerate every symmetric identity-free subset for one n and classify each
    Census {
        kind: KindArg,
        n: u64,
        /// Write the table to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Table format
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Raise the census bound (also settable via DS_MAX_N)
        #[arg(long)]
        max_n: Option<u64>,
        /// Worker threads for the sweep
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Sweep all subsets for 3 <= n <= max-n, comparing divisibility verdicts
    /// against the determinant oracle and checking the structural identities
    Verify {
        kind: KindArg,
        max_n: u64,
        /// Worker threads for the sweep
        #[arg(long)]
        jobs: Option<usize>,
        /// Emit the summary as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print exact characteristic polynomial(s) for one graph
    Spectrum {
        kind: KindArg,
        n: u64,
        set: String,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
        /// Admit sets that do not generate the group
        #[arg(long)]
        allow_nongenerating: bool,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_DATA,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> CliError {
        CliError {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let kind = e.kind();
            let _ = e.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_USAGE)
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Check {
            kind,
            n,
            set,
            oracle,
            json,
            allow_nongenerating,
        } => run_check(kind.into(), n, &set, oracle, json, allow_nongenerating),
        Command::Census {
            kind,
            n,
            out,
            format,
            max_n,
            jobs,
        } => run_census(kind.into(), n, out, format, max_n, jobs),
        Command::Verify {
            kind,
            max_n,
            jobs,
            json,
        } => run_verify(kind.into(), max_n, jobs, json),
        Command::Spectrum {
            kind,
            n,
            set,
            json,
            allow_nongenerating,
        } => run_spectrum(kind.into(), n, &set, json, allow_nongenerating),
    }
}

fn parse_or_explain(
    kind: GroupKind,
    n: u64,
    text: &str,
    allow_nongenerating: bool,
) -> Result<dsing_core::group::ConnectingSet, CliError> {
    parse_set(kind, n, text, !allow_nongenerating)
        .map_err(|e| CliError::data(format!("invalid connecting set: {e}")))
}

fn run_check(
    kind: GroupKind,
    n: u64,
    text: &str,
    oracle: bool,
    json: bool,
    allow_nongenerating: bool,
) -> Result<u8, CliError> {
    let set = parse_or_explain(kind, n, text, allow_nongenerating)?;
    let report = check(&set, oracle);
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", render_check(&report));
    }
    Ok(if report.verdict.is_singular() {
        EXIT_SINGULAR
    } else {
        0
    })
}

fn render_check(report: &SingularityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph: {} n={} set=\"{}\"{}",
        report.group_kind,
        report.n,
        report.connecting_set,
        if report.is_generating {
            ""
        } else {
            " (non-generating)"
        }
    );
    let _ = writeln!(out, "verdict: {}", report.verdict);
    let _ = writeln!(
        out,
        "tested polynomial: {}",
        report.certificate.tested_polynomial
    );
    if report.certificate.dividing_d.is_empty() {
        let _ = writeln!(out, "dividing cyclotomic indices: none");
    } else {
        let list = join_u64(&report.certificate.dividing_d);
        let _ = writeln!(
            out,
            "dividing cyclotomic indices: {list} (totient sum {})",
            report.certificate.nullity
        );
    }
    if let Some(block) = report.block_nullity {
        let _ = writeln!(out, "block nullity (of M^2 - N^2, not the graph): {block}");
    }
    if let Some(det) = &report.oracle_determinant {
        let _ = writeln!(out, "oracle determinant: {det}");
    }
    if let Some(nullity) = report.oracle_nullity {
        let _ = writeln!(out, "oracle nullity: {nullity}");
    }
    if let Some(agreement) = report.agreement {
        let _ = writeln!(out, "agreement: {}", if agreement { "yes" } else { "NO" });
    }
    out
}

fn census_bound(kind: GroupKind, max_n: Option<u64>) -> u64 {
    max_n
        .or_else(|| {
            std::env::var("DS_MAX_N")
                .ok()
                .and_then(|v| v.parse::<u64>().ok())
        })
        .unwrap_or_else(|| default_census_bound(kind))
}

fn run_census(
    kind: GroupKind,
    n: u64,
    out: Option<PathBuf>,
    format: TableFormat,
    max_n: Option<u64>,
    jobs: Option<usize>,
) -> Result<u8, CliError> {
    if n < 3 {
        return Err(CliError::data("census requires n >= 3"));
    }
    let bound = census_bound(kind, max_n);
    if n > bound {
        return Err(CliError::usage(format!(
            "census for {kind} n={n} would enumerate {} subsets, above the configured bound \
             n<={bound}; raise it with --max-n {n} or DS_MAX_N={n} if the cost is intended",
            subset_count(kind, n)
        )));
    }
    let summary = with_jobs(jobs, || census(kind, n))?;
    let table = match format {
        TableFormat::Csv => render_census_csv(&summary.rows)?,
        TableFormat::Json => format!("{}\n", serde_json::to_string_pretty(&summary.rows)?),
    };
    let summary_line = format!(
        "census {kind} n={n}: total {} subsets, {} singular",
        summary.total, summary.singular
    );
    match out {
        Some(path) => {
            std::fs::write(&path, table)?;
            println!("{summary_line}");
            println!("table written to {}", path.display());
        }
        None => {
            print!("{table}");
            eprintln!("{summary_line}");
        }
    }
    Ok(0)
}

fn render_census_csv(rows: &[CensusRow]) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["n", "groupKind", "set", "isGenerating", "edgeCount", "verdict", "dividingD"])?;
    for row in rows {
        writer.write_record([
            row.n.to_string(),
            row.group_kind.to_string(),
            row.set.clone(),
            row.is_generating.to_string(),
            row.edge_count.to_string(),
            row.verdict.to_string(),
            join_u64(&row.dividing_d),
        ])?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError {
        code: EXIT_IO,
        message: e.to_string(),
    })?;
    String::from_utf8(bytes).map_err(|e| CliError {
        code: EXIT_IO,
        message: e.to_string(),
    })
}

fn join_u64(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_verify(
    kind: GroupKind,
    max_n: u64,
    jobs: Option<usize>,
    json: bool,
) -> Result<u8, CliError> {
    if max_n < 3 {
        return Err(CliError::usage("verify requires max-n >= 3"));
    }
    let summary = with_jobs(jobs, || verify(kind, max_n))?;
    if json {
        println!("{}", serde_json::to_string_pretty(&summary)?);
    } else if summary.passed() {
        println!(
            "verify {kind} up to n={max_n}: all {} subsets agree",
            summary.subsets_checked
        );
    } else {
        println!(
            "verify {kind} up to n={max_n}: {} subsets checked, {} FAILURES",
            summary.subsets_checked,
            summary.failures.len()
        );
        let first = &summary.failures[0];
        println!("first counterexample:");
        println!("  n: {}", first.n);
        println!("  set: \"{}\"", first.set);
        println!("  failed check: {}", first.failed_check);
        println!("  divisibility verdict: {}", first.divisibility_verdict);
        println!("  oracle verdict: {}", first.oracle_verdict);
        println!("  determinant: {}", first.determinant);
    }
    Ok(if summary.passed() { 0 } else { EXIT_DISAGREEMENT })
}

fn run_spectrum(
    kind: GroupKind,
    n: u64,
    text: &str,
    json: bool,
    allow_nongenerating: bool,
) -> Result<u8, CliError> {
    let set = parse_or_explain(kind, n, text, allow_nongenerating)?;
    let report = spectrum(&set);
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(0);
    }
    match &report {
        SpectrumReport::Cyclic {
            n,
            connecting_set,
            char_poly,
            eigenvalues,
        } => {
            println!("graph: cyclic n={n} set=\"{connecting_set}\"");
            println!("characteristic polynomial: {char_poly}");
            let floats = eigenvalues
                .iter()
                .map(|v| format!("{:.4}", v))
                .collect::<Vec<_>>()
                .join(", ");
            println!("eigenvalues (advisory floats): {floats}");
        }
        SpectrumReport::Dihedral {
            n,
            connecting_set,
            factor_sum,
            factor_difference,
            product,
        } => {
            println!("graph: dihedral n={n} set=\"{connecting_set}\"");
            println!("char(M + N): {factor_sum}");
            println!("char(M - N): {factor_difference}");
            println!("product = char(A): {product}");
        }
    }
    Ok(0)
}

fn with_jobs<T: Send>(jobs: Option<usize>, task: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match jobs {
        None => Ok(task()),
        Some(threads) => {
            if threads == 0 {
                return Err(CliError::usage("--jobs must be at least 1"));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::usage(format!("cannot build worker pool: {e}")))?;
            Ok(pool.install(task))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_cli_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn census_bound_prefers_flag_over_default() {
        assert_eq!(census_bound(GroupKind::Cyclic, Some(40)), 40);
        assert_eq!(census_bound(GroupKind::Dihedral, None), 10);
    }

    #[test]
    fn join_renders_space_separated() {
        assert_eq!(join_u64(&[1, 2, 4]), "1 2 4");
        assert_eq!(join_u64(&[]), "");
    }
}
