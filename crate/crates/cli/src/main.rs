use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use minorlink::connectivity::{parse_lambda, Lambda};
use minorlink::VertexId;
use minorlink_cli::config::{parse_range, parse_spec};
use minorlink_cli::{run, with_workers, workers_from_env, ExperimentConfig, SubsetPlan, SweepConfig, TheoremConfig, EXIT_INPUT};

/// Rooted cycle minors: exact checks, solver and experiments.
///
/// Results are JSON, one record per line. Set MINORLINK_WORKERS to bound the
/// number of worker threads.
#[derive(Parser)]
#[command(name = "minorlink", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn lambda_arg(s: &str) -> Result<Lambda, String> {
    parse_lambda(s).map_err(|e| e.to_string())
}

fn subsets_arg(s: &str) -> Result<SubsetPlan, String> {
    if s == "all" {
        return Ok(SubsetPlan::All);
    }
    s.parse().map(SubsetPlan::Random).map_err(|e| format!("expected a count or \"all\": {e}"))
}

#[derive(Args)]
struct RootsArg {
    /// Comma-separated root vertices.
    #[arg(long, value_delimiter = ',', required = true)]
    roots: Vec<VertexId>,
}

#[derive(Subcommand)]
enum Command {
    /// Look for a cycle minor rooted at the given order (exit 0 found, 1 none).
    Check {
        #[arg(long, value_delimiter = ',', required = true)]
        order: Vec<VertexId>,
        file: PathBuf,
    },
    /// Test every cyclic order of the roots (exit 0 linked, 1 not).
    CycleLinked {
        #[command(flatten)]
        roots: RootsArg,
        file: PathBuf,
    },
    /// Evaluate both massed conditions (exit 0 massed, 1 not).
    Massed {
        /// Density threshold, `N` or `N/D`.
        #[arg(long, value_parser = lambda_arg)]
        lambda: Lambda,
        #[command(flatten)]
        roots: RootsArg,
        file: PathBuf,
    },
    /// Run the reducer (exit 0 model, 1 obstruction certificate, 3 unexplained).
    Solve {
        #[command(flatten)]
        roots: RootsArg,
        /// Print rule firings to stderr.
        #[arg(long)]
        explain: bool,
        file: PathBuf,
    },
    /// Write an obstruction-family instance as graph6 plus a JSON sidecar.
    GenExtremal {
        /// Components as `attachment:size`, comma separated; empty for none.
        #[arg(long, default_value = "")]
        spec: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Sample c-connected graphs and check every cyclic order of root subsets.
    VerifyTheorem(TheoremArgs),
    /// Compare the engine with the brute-force oracle.
    OracleSweep(SweepArgs),
}

#[derive(Args)]
struct TheoremArgs {
    #[arg(long, default_value_t = 10)]
    connectivity: usize,
    #[arg(long, value_parser = parse_range, default_value = "12:16")]
    n_range: (usize, usize),
    #[arg(long, default_value_t = 50)]
    graphs: usize,
    /// Root subsets per graph: a count or `all`.
    #[arg(long, value_parser = subsets_arg, default_value = "3")]
    subsets: SubsetPlan,
    #[arg(long, default_value_t = 5)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use the graphs in these files instead of sampling.
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Directory for falsifier artifacts.
    #[arg(long)]
    archive: Option<PathBuf>,
    #[arg(long, default_value_t = 100_000)]
    max_attempts: usize,
    /// Omit timing fields so reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Directory of `.g6` files.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', default_value = "3,4")]
    k: Vec<usize>,
    /// Number of extra random instances.
    #[arg(long, default_value_t = 0)]
    random: usize,
    #[arg(long, value_parser = parse_range, default_value = "7:9")]
    random_n: (usize, usize),
    #[arg(long, default_value_t = 5)]
    random_k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    no_timing: bool,
}

impl Command {
    fn into_config(self) -> Result<ExperimentConfig, String> {
        Ok(match self {
            Command::Check { order, file } => ExperimentConfig::Check { input: file, order },
            Command::CycleLinked { roots, file } => ExperimentConfig::CycleLinked { input: file, roots: roots.roots },
            Command::Massed { lambda, roots, file } => ExperimentConfig::Massed { input: file, roots: roots.roots, lambda },
            Command::Solve { roots, explain, file } => ExperimentConfig::Solve { input: file, roots: roots.roots, explain },
            Command::GenExtremal { spec, output } => ExperimentConfig::GenExtremal { spec: parse_spec(&spec)?, output },
            Command::VerifyTheorem(a) => ExperimentConfig::VerifyTheorem(TheoremConfig {
                connectivity: a.connectivity,
                n_range: a.n_range,
                graphs: a.graphs,
                subsets: a.subsets,
                k: a.k,
                seed: a.seed,
                inputs: a.input,
                archive: a.archive,
                max_attempts: a.max_attempts,
                timing: !a.no_timing,
            }),
            Command::OracleSweep(a) => ExperimentConfig::OracleSweep(SweepConfig {
                corpus: a.corpus,
                ks: a.k,
                random: a.random,
                random_n: a.random_n,
                random_k: a.random_k,
                seed: a.seed,
                timing: !a.no_timing,
            }),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.command.into_config() {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    match with_workers(workers_from_env(), || run(&cfg)) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.json_lines().as_bytes());
            for note in &report.notes {
                eprintln!("{note}");
            }
            ExitCode::from(report.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
