use std::path::PathBuf;
use std::process::ExitCode;

use angmom_cli::bundled::{self, BUNDLED};
use angmom_cli::config::DerivativeKind;
use angmom_cli::output::{resolve_out_dir, write_outputs, OUT_DIR_ENV};
use angmom_cli::{execute, Overrides};
use angmom_core::diffops::FdOrder;
use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

/// Pointwise angular-momentum conservation checks for exact Maxwell and
/// Dirac field configurations.
///
/// Exit status: 0 when every check passes, 2 when a residual exceeds its
/// tolerance, 1 on configuration or build errors.
#[derive(Parser)]
#[command(name = "angmom", version)]
struct Cli {
    /// Print the bundled scenarios and exit.
    #[arg(long)]
    list_scenarios: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario document (a path, or the name of a bundled scenario).
    Run {
        config: String,
        /// Output directory; overrides ANGMOM_OUT_DIR and the document.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_parser = ["2", "4"])]
        fd_order: Option<String>,
        #[arg(long, value_enum)]
        derivatives: Option<Derivs>,
        /// Relative tolerance for every residual report.
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Derivs {
    Analytic,
    Fd,
}

fn run(
    config: &str,
    out: Option<PathBuf>,
    fd_order: Option<String>,
    derivatives: Option<Derivs>,
    tolerance: Option<f64>,
) -> Result<u8> {
    let mut cfg = bundled::load(config)?;
    let overrides = Overrides {
        fd_order: fd_order.map(|s| if s == "4" { FdOrder::Four } else { FdOrder::Two }),
        derivatives: derivatives.map(|d| match d {
            Derivs::Analytic => DerivativeKind::Analytic,
            Derivs::Fd => DerivativeKind::Fd,
        }),
        tolerance,
    };
    overrides.apply(&mut cfg);
    cfg.validate()?;
    let dir = resolve_out_dir(out, std::env::var(OUT_DIR_ENV).ok(), &cfg);
    let result = execute(&cfg)?;
    for line in &result.lines {
        println!("{line}");
    }
    write_outputs(&cfg, &result, &dir)?;
    println!("outputs written to {}", dir.display());
    Ok(result.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list_scenarios {
        for b in BUNDLED {
            println!("{:<24}{}", b.name, b.about);
        }
        return ExitCode::SUCCESS;
    }
    let Some(Command::Run {
        config,
        out,
        fd_order,
        derivatives,
        tolerance,
    }) = cli.command
    else {
        eprintln!("nothing to do: pass `run <config>` or --list-scenarios");
        return ExitCode::from(1);
    };
    match run(&config, out, fd_order, derivatives, tolerance) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
