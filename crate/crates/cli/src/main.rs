//! `graphsep`: command-line driver for the separability toolkit.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use graphsep_core::Subsystem;

#[derive(Parser, Debug)]
#[command(
    name = "graphsep",
    version,
    about = "Exact separability analysis for graph density matrices"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Graph,
    Matrix,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Complete,
    Star,
    Tensor,
    NearestRandom,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print ρ(G) = L(G)/d_G.
    Rho { graph: PathBuf },
    /// Print ρ₊(G) = (Δ(G) + M(G))/d_G.
    RhoPlus { graph: PathBuf },
    /// Partial transpose of the graph or of its density matrix.
    Ptrans {
        graph: PathBuf,
        #[arg(long, value_parser = parse_subsystem)]
        sub: Subsystem,
        #[arg(long, value_enum, default_value_t = Level::Matrix)]
        level: Level,
    },
    /// Check Δ(G) = Δ(G^ΓA) = Δ(G^ΓB) = Δ(G^ΓC).
    Degree { graph: PathBuf },
    /// Exact Peres test on all three cuts.
    Ppt { graph: PathBuf },
    /// Full verdict for one or more graph files. Exits 1 if any is NPT.
    Classify {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        /// Worker threads for batch input.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Separable decomposition from edge orbits, or of a tensor product
    /// when three factor graphs are given with --tensor.
    Decompose {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        #[arg(long)]
        tensor: bool,
    },
    /// Check a certificate. The graph defaults to the one embedded in it.
    Verify {
        graph: Option<PathBuf>,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Entanglement witness for the star graph K_{1,n−1}.
    StarWitness {
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 3, value_names = ["M", "P", "Q"])]
        dims: Vec<usize>,
    },
    /// Generate a graph file.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, num_args = 3, value_names = ["M", "P", "Q"])]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Floating-point eigenvalues of ρ or of one partial transpose.
    Eig {
        graph: PathBuf,
        #[arg(long, default_value_t = graphsep_core::linalg::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_parser = parse_subsystem)]
        sub: Option<Subsystem>,
    },
}

fn parse_subsystem(s: &str) -> Result<Subsystem, String> {
    s.parse().map_err(|e: graphsep_core::Error| e.to_string())
}

/// Exit codes: 0 success, 1 NPT verdict from `classify`, 2 input or usage
/// error.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command, cli.format) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
