use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use circmat_cli::asymptotics::{format_limit, run_asymptotics};
use circmat_cli::generate::run_generate;
use circmat_cli::verify::run_verify;
use circmat_cli::{parse_spec, random_spec, MeasureSpec};
use circmat_core::DEFAULT_NODES;
use clap::{Parser, Subcommand};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "circmat",
    version,
    about = "Matrix orthogonal polynomials from circle measures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write phi_n, H_n, C_n, F_n, P_n and Q_n for n <= N as JSON.
    Gen {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODES)]
        nodes: usize,
    },
    /// Run the invariant suite and print a pass/fail table.
    Verify {
        /// Spec file; without it a random head is drawn from --seed.
        #[arg(long)]
        measure: Option<PathBuf>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_NODES)]
        nodes: usize,
    },
    /// Write the LONP convergence table `n,err,rate` at x as CSV.
    Asymptotics {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODES)]
        nodes: usize,
    },
}

fn load(measure: Option<PathBuf>, seed: Option<u64>) -> Result<MeasureSpec> {
    match (measure, seed) {
        (Some(path), _) => parse_spec(&path).with_context(|| format!("spec {}", path.display())),
        (None, Some(seed)) => Ok(random_spec(seed)),
        (None, None) => bail!("verify needs --measure or --seed"),
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen {
            measure,
            n,
            out,
            nodes,
        } => {
            let spec = load(Some(measure), None)?;
            run_generate(&spec, n, nodes, &out)?;
            println!("wrote {}", out.display());
            Ok(true)
        }
        Command::Verify {
            measure,
            n,
            tol,
            seed,
            nodes,
        } => {
            let spec = load(measure, seed)?;
            let report = run_verify(&spec, n, tol, nodes)?;
            println!("{report}");
            Ok(report.passed())
        }
        Command::Asymptotics {
            measure,
            x,
            n_max,
            out,
            nodes,
        } => {
            let spec = load(Some(measure), None)?;
            let report = run_asymptotics(&spec, x, n_max, nodes, &out)?;
            print!("{}", format_limit(&report.limit));
            println!("wrote {}", out.display());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
