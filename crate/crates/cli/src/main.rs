mod commands;
mod range;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use range::InclusiveRange;

/// Exit status for a run whose checks found a mismatch or violation.
const EXIT_FAILED: u8 = 1;
/// Exit status for bad arguments, rejected parameters or refused budgets.
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "distspec",
    version,
    about = "Distance spectra of graphs: closed forms, exact oracles and verification sweeps"
)]
struct Cli {
    /// Output format; csv is available for the verification grids only
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for grid commands (DISTSPEC_WORKERS takes precedence)
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A graph named by family and parameters, or read from an edge-list file.
#[derive(Args)]
pub struct Target {
    /// Family name; run `distspec families` for the list
    family: Option<String>,
    /// Family parameters, in the order listed by `distspec families`
    params: Vec<usize>,
    /// Edge-list file (`n m` header, then one `u v` pair per line)
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Distance spectrum from the closed form, numerically, or both
    Spectrum {
        #[command(flatten)]
        target: Target,
        /// Compute both spectra and compare them
        #[arg(long)]
        verify: bool,
        /// Absolute tolerance for the comparison
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Check closed forms against oracles over a parameter grid
    Verify(VerifyArgs),
    /// Feasibility, optimism and eigenvalue data for SRG parameters
    Srg {
        n: u64,
        k: u64,
        lambda: u64,
        mu: u64,
    },
    /// Check the diameter bounds on every tree up to the given order
    VerifyTrees {
        #[arg(long)]
        max_order: usize,
    },
    /// Zero forcing lower bound on the number of distinct distance eigenvalues
    ZfBound {
        #[command(flatten)]
        target: Target,
    },
    /// Print the distance matrix
    Matrix {
        #[command(flatten)]
        target: Target,
    },
    /// Exact determinant and inertia of the distance matrix
    Det {
        #[command(flatten)]
        target: Target,
        /// Read an integer symmetric matrix instead of a graph
        #[arg(long, conflicts_with_all = ["family", "graph"])]
        matrix: Option<PathBuf>,
    },
    /// List the known families and their parameters
    Families,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// A family with a closed form, `barbell`, or `lemma-identities`
    family: String,
    /// Parameter ranges, written `a..b` (inclusive) or as a single value
    #[arg(long)]
    n: Option<InclusiveRange>,
    #[arg(long)]
    r: Option<InclusiveRange>,
    #[arg(long)]
    d: Option<InclusiveRange>,
    #[arg(long)]
    m: Option<InclusiveRange>,
    #[arg(long)]
    k: Option<InclusiveRange>,
    #[arg(long)]
    l: Option<InclusiveRange>,
    #[arg(long)]
    q: Option<InclusiveRange>,
    #[arg(long)]
    a: Option<InclusiveRange>,
    #[arg(long)]
    b: Option<InclusiveRange>,
    /// Largest parameter for `lemma-identities`
    #[arg(long, default_value_t = 20)]
    max: u32,
    /// Absolute tolerance for spectrum comparisons
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

impl VerifyArgs {
    fn range(&self, name: &str) -> Option<InclusiveRange> {
        match name {
            "n" => self.n,
            "r" => self.r,
            "d" => self.d,
            "m" => self.m,
            "k" => self.k,
            "l" => self.l,
            "q" => self.q,
            "a" => self.a,
            "b" => self.b,
            _ => None,
        }
    }
}

/// Rendered output and whether every check in it passed.
pub struct Report {
    pub body: String,
    pub ok: bool,
}

fn configure_workers(flag: Option<usize>) -> anyhow::Result<()> {
    let workers = match std::env::var("DISTSPEC_WORKERS") {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .ok()
                .filter(|&w| w > 0)
                .with_context(|| {
                    format!("DISTSPEC_WORKERS must be a positive integer, got `{v}`")
                })?,
        ),
        Err(_) => flag,
    };
    if let Some(w) = workers {
        if w == 0 {
            bail!("--workers must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Report> {
    configure_workers(cli.workers)?;
    let fmt = cli.format;
    let grid_command = matches!(
        cli.command,
        Command::Verify(_) | Command::VerifyTrees { .. }
    );
    if fmt == Format::Csv && !grid_command {
        bail!("csv output is available for `verify` and `verify-trees` only");
    }
    match cli.command {
        Command::Spectrum {
            target,
            verify,
            tol,
        } => commands::spectrum(&target, verify, tol, fmt),
        Command::Verify(args) => commands::verify(&args, fmt),
        Command::Srg { n, k, lambda, mu } => commands::srg(n, k, lambda, mu, fmt),
        Command::VerifyTrees { max_order } => commands::verify_trees(max_order, fmt),
        Command::ZfBound { target } => commands::zf_bound(&target, fmt),
        Command::Matrix { target } => commands::matrix(&target, fmt),
        Command::Det { target, matrix } => commands::det(&target, matrix.as_deref(), fmt),
        Command::Families => commands::families(fmt),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.body);
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
