//! `qtak`: construct Takasaki quandles, inspect their orbit structure,
//! decompose their quandle rings into simple right ideals, and batch-verify
//! the whole theory over every small abelian group.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtak_core::decomp::{self, Field};
use qtak_core::sweep::{self, SweepConfig};
use qtak_core::{Error, GroupSpec, Quandle};

use qtak_cli::{json, report, text};

#[derive(Parser)]
#[command(
    name = "qtak",
    version,
    about = "Takasaki quandles: axioms, orbits, characters, and the decomposition of K[T] into simple right ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the three quandle axioms on the Takasaki quandle of a group
    Axioms(GroupArgs),
    /// List the orbits of the inner automorphism group action
    Orbits(GroupArgs),
    /// Decompose K[T] into simple right ideals and verify the projectors
    Decompose(DecomposeArgs),
    /// Batch-verify every claim for all group specs up to a maximum order
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Real,
    Complex,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GroupArgs {
    /// Group spec: cyclic moduli joined by 'x', e.g. 4x6x3
    #[arg(long)]
    group: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Group spec: cyclic moduli joined by 'x', e.g. 4x6x3
    #[arg(long)]
    group: String,
    /// Ground field for the projector verification
    #[arg(long, value_enum, default_value_t = FieldArg::Real)]
    field: FieldArg,
    /// Residual tolerance for the projector checks
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest group order to sweep
    #[arg(long)]
    max_order: u64,
    /// Residual tolerance for the projector checks
    #[arg(long)]
    tol: Option<f64>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let usage_ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if usage_ok { ExitCode::SUCCESS } else { ExitCode::from(2) };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::Validation(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn check_tol(tol: Option<f64>) -> qtak_core::Result<Option<f64>> {
    if let Some(t) = tol {
        if !t.is_finite() || t <= 0.0 {
            return Err(Error::Validation(format!("tolerance must be > 0 (got {t})")));
        }
    }
    Ok(tol)
}

fn emit(output: &OutputArgs, content: &str) -> qtak_core::Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> qtak_core::Result<bool> {
    match cli.command {
        Command::Axioms(args) => {
            let spec = GroupSpec::parse(&args.group)?;
            let q = Quandle::takasaki(&spec)?;
            let pass = q.check_axioms().all_pass();
            let content = match args.output.format {
                FormatArg::Text => text::axioms_text(&q, &args.group),
                FormatArg::Json => json::render(&report::axioms_value(&q, &args.group)),
            };
            emit(&args.output, &content)?;
            Ok(pass)
        }
        Command::Orbits(args) => {
            let spec = GroupSpec::parse(&args.group)?;
            let q = Quandle::takasaki(&spec)?;
            let listings = report::orbit_listings(&q)?;
            let pass = listings.len() == 1 << spec.even_count();
            let content = match args.output.format {
                FormatArg::Text => text::orbits_text(&q, &args.group, &listings),
                FormatArg::Json => json::render(&report::orbits_value(&q, &args.group, &listings)),
            };
            emit(&args.output, &content)?;
            Ok(pass)
        }
        Command::Decompose(args) => {
            let tol = check_tol(args.tol)?;
            let spec = GroupSpec::parse(&args.group)?;
            let q = Quandle::takasaki(&spec)?;
            let decomposition = decomp::decompose(&q)?;
            let field = match args.field {
                FieldArg::Real => Field::Real,
                FieldArg::Complex => Field::Complex,
            };
            let verification = decomp::verify_right_ideals(&decomposition, field, tol)?;
            let content = match args.output.format {
                FormatArg::Text => text::decompose_text(
                    &args.group,
                    &decomposition.report,
                    &decomposition.tables[0],
                    &verification,
                ),
                FormatArg::Json => json::render(&report::decompose_value(
                    &q,
                    &args.group,
                    &decomposition.report,
                    &decomposition.actions,
                    &decomposition.tables[0],
                    &verification,
                )),
            };
            emit(&args.output, &content)?;
            Ok(verification.all_pass)
        }
        Command::Verify(args) => {
            let tol = check_tol(args.tol)?;
            if args.max_order < 1 {
                return Err(Error::Validation("max order must be ≥ 1".into()));
            }
            let config = SweepConfig {
                max_order: args.max_order,
                tolerance: tol.unwrap_or(decomp::PROJECTOR_RESIDUAL_TOL),
                threads: args.threads.unwrap_or(0),
                ..SweepConfig::default()
            };
            let sweep_report = sweep::run_sweep(&config);
            let content = match args.output.format {
                FormatArg::Text => text::verify_text(&sweep_report),
                FormatArg::Json => json::render(&report::verify_value(&sweep_report)),
            };
            emit(&args.output, &content)?;
            Ok(sweep_report.all_pass)
        }
    }
}
