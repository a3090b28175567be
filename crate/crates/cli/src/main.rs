use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use noncrossed::bundle::BundleError;
use noncrossed::replay::{check, cmd_example16, cmd_example8, cmd_example9, CheckKind, Mutation};
use noncrossed::report::VerificationReport;

/// Replays the worked examples of noncrossed product division algebras and
/// verifies user-supplied JSON bundles with exact arithmetic.
#[derive(Parser)]
#[command(name = "noncrossed", version)]
struct Cli {
    /// Emit the versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Show the detail of passing checks too.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Index 8, exponent 8 over Q(√3, √−7).
    Example8 {
        #[arg(long)]
        mutate: Option<Mutation>,
    },
    /// Index and exponent 9 over a cyclic cubic field.
    Example9 {
        #[arg(long)]
        mutate: Option<Mutation>,
    },
    /// Index 16, exponent 8 after adjoining √37.
    Example16 {
        #[arg(long)]
        mutate: Option<Mutation>,
    },
    /// Run one verifier on a JSON bundle.
    Check {
        #[arg(long)]
        bundle: PathBuf,
        /// factorset, invariants, certificate or normsearch.
        #[arg(long)]
        kind: CheckKind,
        /// Height bound for normsearch.
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
}

fn run(cmd: &Command) -> Result<VerificationReport, String> {
    let err = |e: BundleError| e.to_string();
    match cmd {
        Command::Example8 { mutate } => cmd_example8(*mutate).map_err(err),
        Command::Example9 { mutate } => cmd_example9(*mutate).map_err(err),
        Command::Example16 { mutate } => cmd_example16(*mutate).map_err(err),
        Command::Check { bundle, kind, bound } => {
            let bytes = std::fs::read(bundle).map_err(|e| format!("{}: {e}", bundle.display()))?;
            let text = std::str::from_utf8(&bytes).map_err(|e| format!("{}: {e}", bundle.display()))?;
            let report = check(*kind, text, *bound).map_err(err)?;
            let name = format!("check --kind {} --bound {bound}", kind.name());
            Ok(VerificationReport::new(&name, &bytes, report))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text(cli.verbose));
            }
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
