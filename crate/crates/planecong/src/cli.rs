//! Command-line surface: series builders, period certificates, congruence
//! checks, witness expansions, searches, scans, and the enumeration
//! oracles, each as a subcommand with text or JSON output.
//!
//! Exit codes: 0 when every verdict is proved or held (and for plain data
//! commands), 1 when a check is refuted or a witness fails to confirm,
//! 2 for usage and internal errors. Reports go to standard output,
//! diagnostics to standard error.

use crate::congruence::{
    alpha_check, empirical_check, prime_power_witness, verify_bounded, CongruenceStatement,
    Verdict, VerificationReport, WitnessCase,
};
use crate::partitions::{
    beta_series, enum_multi_limited, enum_plane_limited, enum_restricted_limited, f_series,
    multipartition_series, pl_series, restricted_series, s_k_multiset, ColoredPartMultiset,
    OracleLimit,
};
use crate::periodicity::kwong_period;
use crate::search::{render_scan_table, run_enumeration, run_zero_scan, SearchConfig};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::ffi::OsString;
use std::io::Write;

/// Environment variable holding an override for both enumeration oracle
/// caps (largest weight and largest component count).
pub const ORACLE_LIMIT_ENV: &str = "PLANECONG_ORACLE_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "planecong",
    version,
    about = "Plane-partition congruences: series, period certificates, proofs, and searches"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficients of a generating series mod m.
    Series(SeriesArgs),
    /// Print the minimal-period certificate for a part multiset mod
    /// prime^exp.
    Period(PeriodArgs),
    /// Check a congruence statement.
    Verify(VerifyArgs),
    /// Expand a prime-power witness polynomial and check its coefficient
    /// conditions.
    Witness(WitnessArgs),
    /// Enumerate candidate congruences for a prime and keep the proved
    /// ones.
    Search(SearchArgs),
    /// Scan residue classes of small primes for vanishing progressions.
    Scan(ScanArgs),
    /// Count partitions by brute-force enumeration.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Which series to build.
    #[arg(long, value_enum)]
    pub kind: SeriesKind,
    /// Component count; for beta, the prime (required except for
    /// restricted).
    #[arg(long)]
    pub k: Option<u64>,
    /// Coefficient modulus; beta requires it to equal --k.
    #[arg(long = "mod")]
    pub modulus: u64,
    /// Number of coefficients to print.
    #[arg(long)]
    pub order: usize,
    /// Part multiset for --kind restricted, e.g. 1,2,2,3.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// Plane-partition counts with at most k layers.
    Pl,
    /// Finite head product of the plane-partition series.
    Head,
    /// k-component multipartition counts.
    Multi,
    /// Tail coefficients supported on multiples of the prime.
    Beta,
    /// Partition counts with parts from a colored multiset.
    Restricted,
}

#[derive(Debug, Args)]
pub struct PeriodArgs {
    /// Prime base of the modulus prime^exp.
    #[arg(long)]
    pub prime: u64,
    /// Exponent in the modulus prime^exp.
    #[arg(long, default_value_t = 1)]
    pub exp: u32,
    /// Part multiset, e.g. 1,2,2,3; defaults to the head-factor multiset
    /// of the prime.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Component count of the plane-partition function.
    #[arg(long)]
    pub k: u64,
    /// Congruence modulus.
    #[arg(long = "mod")]
    pub modulus: u64,
    /// Progression step; defaults to the modulus.
    #[arg(long)]
    pub step: Option<u64>,
    /// Left-side residues, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub lhs: Vec<u64>,
    /// Right-side residues, comma-separated, or 0-terms for an empty side.
    #[arg(long)]
    pub rhs: String,
    /// Check to run; auto picks the bounded proof when the statement is in
    /// its scope and the horizon check otherwise.
    #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
    pub method: MethodChoice,
    /// Progressions examined by the horizon check.
    #[arg(long, default_value_t = 500)]
    pub horizon: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Auto,
    Bounded,
    Alpha,
    Empirical,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    /// Which prime-power family to expand.
    #[arg(long, value_enum)]
    pub case: WitnessChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessChoice {
    Mod4Triple,
    Mod4Odd,
    Mod8Triple,
}

impl From<WitnessChoice> for WitnessCase {
    fn from(choice: WitnessChoice) -> Self {
        match choice {
            WitnessChoice::Mod4Triple => WitnessCase::Mod4Triple,
            WitnessChoice::Mod4Odd => WitnessCase::Mod4Odd,
            WitnessChoice::Mod8Triple => WitnessCase::Mod8Triple,
        }
    }
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Prime whose statement family to enumerate.
    #[arg(long)]
    pub prime: u64,
    /// Largest residue multiset size per statement side.
    #[arg(long = "max-terms", default_value_t = 2)]
    pub max_terms: usize,
    /// Worker threads; 0 lets the pool pick.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Scan primes up to this limit, inclusive.
    #[arg(long, default_value_t = 31)]
    pub limit: u64,
    /// Progressions examined per residue class; default is 10 times each
    /// prime.
    #[arg(long)]
    pub horizon: Option<u64>,
    /// Worker threads; 0 lets the pool pick.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("family").required(true).args(["plane", "restricted", "multi"])))]
pub struct OracleArgs {
    /// Count plane partitions of n with at most k layers.
    #[arg(long)]
    pub plane: bool,
    /// Count partitions of n with parts from --parts.
    #[arg(long)]
    pub restricted: bool,
    /// Count k-component multipartitions of n.
    #[arg(long)]
    pub multi: bool,
    /// Weight to count at.
    #[arg(long)]
    pub n: u64,
    /// Component count for --plane and --multi.
    #[arg(long)]
    pub k: Option<u64>,
    /// Part multiset for --restricted, e.g. 1,2,2,3.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<u64>>,
}

/// Machine-readable form of a `series` invocation's output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesOutput {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u64>,
    pub modulus: u64,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parts: Option<Vec<u64>>,
    pub coeffs: Vec<u64>,
}

/// Machine-readable form of an `oracle` invocation's output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutput {
    pub family: String,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parts: Option<Vec<u64>>,
    pub count: u64,
}

/// Parses `argv` and executes the command, writing reports to `stdout`
/// and diagnostics to `stderr`; returns the process exit code.
pub fn run_from<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(cli, stdout, stderr),
        Err(parse_err) => {
            let rendered = parse_err.render();
            if parse_err.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                2
            } else {
                // Help and version requests parse as "errors" but succeed.
                let _ = write!(stdout, "{rendered}");
                0
            }
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Series(args) => cmd_series(args, cli.format, out),
        Command::Period(args) => cmd_period(args, cli.format, out),
        Command::Verify(args) => cmd_verify(args, cli.format, out, err),
        Command::Witness(args) => cmd_witness(args, cli.format, out),
        Command::Search(args) => cmd_search(args, cli.format, out),
        Command::Scan(args) => cmd_scan(args, cli.format, out),
        Command::Oracle(args) => cmd_oracle(args, cli.format, out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

type CmdResult = Result<i32, String>;

fn emit_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<(), String> {
    let json = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    writeln!(out, "{json}").map_err(|e| e.to_string())
}

fn cmd_series(args: SeriesArgs, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let kind_tag = match args.kind {
        SeriesKind::Pl => "pl",
        SeriesKind::Head => "head",
        SeriesKind::Multi => "multi",
        SeriesKind::Beta => "beta",
        SeriesKind::Restricted => "restricted",
    };
    let series = match args.kind {
        SeriesKind::Pl | SeriesKind::Head | SeriesKind::Multi | SeriesKind::Beta => {
            let k = args
                .k
                .ok_or_else(|| format!("--kind {kind_tag} requires --k"))?;
            match args.kind {
                SeriesKind::Pl => pl_series(k, args.modulus, args.order),
                SeriesKind::Head => f_series(k, args.modulus, args.order),
                SeriesKind::Multi => multipartition_series(k, args.modulus, args.order),
                SeriesKind::Beta => {
                    if args.modulus != k {
                        return Err(format!(
                            "--kind beta works mod the prime itself; pass --mod {k}"
                        ));
                    }
                    beta_series(k, args.order)
                }
                SeriesKind::Restricted => unreachable!(),
            }
        }
        SeriesKind::Restricted => {
            let parts = args
                .parts
                .as_ref()
                .ok_or("--kind restricted requires --parts")?;
            let multiset = ColoredPartMultiset::from_parts(parts).map_err(|e| e.to_string())?;
            restricted_series(&multiset, args.modulus, args.order)
        }
    }
    .map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Text => {
            let rendered: Vec<String> = series.coeffs().iter().map(u64::to_string).collect();
            writeln!(out, "{}", rendered.join(" ")).map_err(|e| e.to_string())?;
        }
        OutputFormat::Json => emit_json(
            &SeriesOutput {
                kind: kind_tag.to_string(),
                k: args.k,
                modulus: args.modulus,
                order: args.order,
                parts: args.parts,
                coeffs: series.coeffs().to_vec(),
            },
            out,
        )?,
    }
    Ok(0)
}

fn cmd_period(args: PeriodArgs, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let multiset = match &args.parts {
        Some(parts) => ColoredPartMultiset::from_parts(parts).map_err(|e| e.to_string())?,
        None => s_k_multiset(args.prime),
    };
    let certificate = kwong_period(args.prime, args.exp, &multiset).map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Text => {
            writeln!(out, "{}", certificate.period).map_err(|e| e.to_string())?;
        }
        OutputFormat::Json => emit_json(&certificate, out)?,
    }
    Ok(0)
}

fn cmd_verify(
    args: VerifyArgs,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let step = args.step.unwrap_or(args.modulus);
    let rhs = parse_side(&args.rhs)?;
    if step > 0 {
        let reduced: Vec<u64> = args
            .lhs
            .iter()
            .chain(&rhs)
            .filter(|&&r| r >= step)
            .copied()
            .collect();
        if !reduced.is_empty() {
            let _ = writeln!(
                err,
                "note: residues {reduced:?} lie outside [0, {step}) and were reduced; \
                 the progression claim is unchanged up to reindexing"
            );
        }
    }
    let statement = CongruenceStatement::new(args.k, args.modulus, step, args.lhs, rhs)
        .map_err(|e| e.to_string())?;
    let in_scope =
        statement.components() == statement.modulus() && statement.step() == statement.modulus();
    let report = match args.method {
        MethodChoice::Bounded => verify_bounded(&statement),
        MethodChoice::Alpha => alpha_check(&statement),
        MethodChoice::Empirical => empirical_check(&statement, args.horizon),
        MethodChoice::Auto => {
            if in_scope && crate::arith::is_prime(statement.modulus()) {
                verify_bounded(&statement)
            } else {
                empirical_check(&statement, args.horizon)
            }
        }
    }
    .map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Text => write_report_text(&report, out)?,
        OutputFormat::Json => emit_json(&report, out)?,
    }
    Ok(verdict_code(report.verdict))
}

fn cmd_witness(args: WitnessArgs, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let report = prime_power_witness(args.case.into()).map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Text => {
            let rendered: Vec<String> = report.polynomial.iter().map(i64::to_string).collect();
            writeln!(out, "case {}", report.kind).map_err(|e| e.to_string())?;
            writeln!(out, "polynomial: {}", rendered.join(" ")).map_err(|e| e.to_string())?;
            writeln!(out, "confirmed: {}", report.confirmed).map_err(|e| e.to_string())?;
        }
        OutputFormat::Json => emit_json(&report, out)?,
    }
    Ok(if report.confirmed { 0 } else { 1 })
}

fn cmd_search(args: SearchArgs, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let cfg = SearchConfig {
        prime: args.prime,
        max_terms_per_side: args.max_terms,
        worker_count: args.workers,
        ..SearchConfig::default()
    };
    let run = run_enumeration(&cfg).map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Text => {
            for report in &run.results {
                write_report_line(report, out)?;
            }
            writeln!(out, "proved {} statements", run.results.len()).map_err(|e| e.to_string())?;
        }
        OutputFormat::Json => emit_json(&run, out)?,
    }
    Ok(0)
}

fn cmd_scan(args: ScanArgs, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let cfg = SearchConfig {
        scan_prime_limit: args.limit,
        scan_horizon: args.horizon,
        worker_count: args.workers,
        ..SearchConfig::default()
    };
    let run = run_zero_scan(&cfg).map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Text => {
            write!(out, "{}", render_scan_table(&run.results)).map_err(|e| e.to_string())?;
        }
        OutputFormat::Json => emit_json(&run, out)?,
    }
    Ok(0)
}

fn cmd_oracle(args: OracleArgs, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let mut limit = OracleLimit::default();
    if let Ok(raw) = std::env::var(ORACLE_LIMIT_ENV) {
        let cap: u64 = raw
            .trim()
            .parse()
            .map_err(|_| format!("invalid {ORACLE_LIMIT_ENV} value {raw:?}"))?;
        limit = OracleLimit {
            max_n: cap,
            max_k: cap,
        };
    }
    let (family, count) = if args.plane {
        let k = args.k.ok_or("--plane requires --k")?;
        ("plane", enum_plane_limited(args.n, k, &limit))
    } else if args.multi {
        let k = args.k.ok_or("--multi requires --k")?;
        ("multi", enum_multi_limited(args.n, k, &limit))
    } else {
        let parts = args.parts.as_ref().ok_or("--restricted requires --parts")?;
        let multiset = ColoredPartMultiset::from_parts(parts).map_err(|e| e.to_string())?;
        (
            "restricted",
            enum_restricted_limited(args.n, &multiset, &limit),
        )
    };
    let count = count.map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Text => writeln!(out, "{count}").map_err(|e| e.to_string())?,
        OutputFormat::Json => emit_json(
            &OracleOutput {
                family: family.to_string(),
                n: args.n,
                k: args.k,
                parts: args.parts,
                count,
            },
            out,
        )?,
    }
    Ok(0)
}

fn verdict_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::ProvedForAllN | Verdict::HoldsToHorizon => 0,
        Verdict::Refuted => 1,
    }
}

fn write_report_line(report: &VerificationReport, out: &mut dyn Write) -> Result<(), String> {
    writeln!(
        out,
        "{}: {} (method {}, checks {} of {})",
        report.statement, report.verdict, report.method, report.checks, report.bound
    )
    .map_err(|e| e.to_string())
}

fn write_report_text(report: &VerificationReport, out: &mut dyn Write) -> Result<(), String> {
    write_report_line(report, out)?;
    if let Some(cx) = &report.counterexample {
        writeln!(
            out,
            "counterexample at n = {}: lhs {}, rhs {}",
            cx.n, cx.lhs_value, cx.rhs_value
        )
        .map_err(|e| e.to_string())?;
    }
    if let Some(cert) = &report.certificate {
        writeln!(
            out,
            "period certificate: {} (prime {}, m {}, b {})",
            cert.period, cert.prime, cert.m_of_s, cert.b_of_s
        )
        .map_err(|e| e.to_string())?;
    }
    Ok(())
}

/// Parses a residue side: `0-terms` for an empty side, else a
/// comma-separated list.
fn parse_side(raw: &str) -> Result<Vec<u64>, String> {
    if raw == "0-terms" {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|token| {
            token
                .trim()
                .parse()
                .map_err(|_| format!("invalid residue list {raw:?}"))
        })
        .collect()
}
