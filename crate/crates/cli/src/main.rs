use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dynkin_ar_cli::commands::{execute, Command, TableKind};
use dynkin_ar_cli::scope::{dedup, quivers_for, single_quiver};
use dynkin_ar_cli::suites::SUITES;
use dynkin_ar_cli::{configure_threads, CliError, CliResult, FieldChoice, Format};

/// Auslander-Reiten combinatorics of Dynkin quivers and the Ext-vanishing
/// criterion for determinantal modules over the preprojective algebra.
#[derive(Parser)]
#[command(name = "dynkin-ar", version)]
struct Cli {
    /// `rational` or `prime:P` with P a prime in (10^6, 2^32)
    #[arg(long, global = true, default_value = "rational")]
    field: String,
    /// json, csv or table (default depends on the command)
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
struct QuiverArgs {
    /// Dynkin type such as A5, D4, E6, or a full `type=...; arrows=...` spec
    #[arg(long = "type")]
    dynkin: String,
    /// `linear`, `bipartite` or an arrow list like `1>2,3<2`
    #[arg(long, default_value = "linear")]
    orientation: String,
}

#[derive(Subcommand)]
enum Sub {
    /// Positive roots in word order with τ-successors
    Roots(QuiverArgs),
    /// Hom and Ext¹ dimensions between indecomposables
    Homtable {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// hom, ext or both
        #[arg(long, default_value = "both")]
        which: String,
    },
    /// Criterion and oracle for one ordered pair of partitions
    CheckPair {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// `tau-orbit base=<root> len=<k>` or `parts=[...]`
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        kappa: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall-clock timings (makes output run-dependent)
        #[arg(long)]
        timing: bool,
    },
    /// All valid τ-orbit partition pairs with their counts and verdicts
    Enumerate {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Also compute Ext¹ over the preprojective algebra
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Quasi-commutation of two monomials `D(j,l)^e * ...`
    Quasicommute {
        #[command(flatten)]
        quiver: QuiverArgs,
        z1: String,
        z2: String,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run verification suites; exit 1 on any mismatch
    Verify {
        /// Dynkin types; each suite's default scope when omitted
        #[arg(long = "type")]
        dynkin: Vec<String>,
        /// Applied to every --type; `all` enumerates orientations
        #[arg(long, default_value = "linear")]
        orientation: String,
        /// Suite names, repeated or comma separated; `all` by default
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trials for the seeded suites (zab, random Kostant pairs)
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        timing: bool,
    },
}

fn build(cli: &Cli) -> CliResult<Command> {
    let format = |default: Format| -> CliResult<Format> { cli.format.as_deref().map_or(Ok(default), str::parse) };
    let q = |a: &QuiverArgs| single_quiver(&a.dynkin, &a.orientation);
    Ok(match &cli.command {
        Sub::Roots(a) => {
            let f = format(Format::Table)?;
            Command::Roots { quiver: q(a)?, format: f }
        }
        Sub::Homtable { quiver, which } => {
            let kinds = match which.as_str() {
                "hom" => vec![TableKind::Hom],
                "ext" => vec![TableKind::Ext],
                "both" => vec![TableKind::Hom, TableKind::Ext],
                other => return Err(CliError::Usage(format!("--which must be hom, ext or both, got '{other}'"))),
            };
            let f = format(Format::Table)?;
            Command::HomTable { quiver: q(quiver)?, format: f, kinds }
        }
        Sub::CheckPair { quiver, lambda, kappa, seed, timing } => {
            let f = format(Format::Json)?;
            Command::CheckPair { quiver: q(quiver)?, lambda: lambda.clone(), kappa: kappa.clone(), seed: *seed, format: f, timing: *timing }
        }
        Sub::Enumerate { quiver, oracle, seed } => {
            let f = format(Format::Table)?;
            Command::Enumerate { quiver: q(quiver)?, format: f, oracle: *oracle, seed: *seed }
        }
        Sub::Quasicommute { quiver, z1, z2, oracle, seed } => {
            let f = format(Format::Json)?;
            Command::QuasiCommute { quiver: q(quiver)?, z1: z1.clone(), z2: z2.clone(), oracle: *oracle, seed: *seed, format: f }
        }
        Sub::Verify { dynkin, orientation, suite, seed, trials, timing } => {
            let mut scope = Vec::new();
            for t in dynkin {
                scope.extend(quivers_for(t, orientation)?);
            }
            let suites: Vec<String> = if suite.is_empty() || suite.iter().any(|s| s == "all") {
                SUITES.iter().map(|s| s.to_string()).collect()
            } else {
                suite.clone()
            };
            let f = format(Format::Json)?;
            Command::Verify { scope: dedup(scope), suites, seed: *seed, trials: *trials, format: f, timing: *timing }
        }
    })
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: &Cli) -> CliResult<i32> {
    configure_threads()?;
    let field: FieldChoice = cli.field.parse()?;
    let cmd = build(cli)?;
    let out = execute(&cmd, field)?;
    emit(cli, &out.text)?;
    Ok(out.exit_code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let json = cli.format.as_deref().map_or(!matches!(cli.command, Sub::Roots(_) | Sub::Homtable { .. } | Sub::Enumerate { .. }), |f| f == "json");
            if json {
                if let Ok(text) = dynkin_ar_cli::commands::to_json(&e.report()) {
                    let _ = emit(&cli, &text);
                }
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
