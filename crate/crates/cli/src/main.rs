mod commands;
mod gen;
mod manifest;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperramsey::verify::ReportFormat;
use std::path::PathBuf;
use std::process::ExitCode;

/// Red/blue 3-graph colorings: build them, check them, extract blue cliques.
///
/// Set RAYON_NUM_THREADS to bound the worker threads.
#[derive(Parser, Debug)]
#[command(name = "hyperramsey", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an instance and write it with a manifest.
    #[command(subcommand)]
    Gen(gen::GenCommand),
    /// Run a check on an instance file.
    Verify(VerifyArgs),
    /// Search for a large blue clique.
    Clique(CliqueArgs),
    /// Extract a blue clique constructively.
    Extract(ExtractArgs),
    /// Binary tree utilities.
    #[command(subcommand)]
    Tree(TreeCommand),
    /// Maximum edges of an iterated tripartite 3-graph on s vertices.
    TTable {
        #[arg(long, default_value_t = 12)]
        max_s: u32,
    },
    /// Re-run the command recorded in a manifest and compare outputs.
    Replay {
        manifest: PathBuf,
        /// Keep the regenerated files here instead of a temporary directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Check {
    RedTripartite,
    PhiConstancy,
    PairwiseIterated,
    Biclique,
    RainbowCount,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    check: Check,
    /// Triple coloring, or pair coloring for biclique and rainbow-count.
    #[arg(long = "in")]
    input: PathBuf,
    /// Pair coloring for phi-constancy.
    #[arg(long)]
    pairs: Option<PathBuf>,
    /// Also check the cross-part color law (phi-constancy).
    #[arg(long)]
    cross_law: bool,
    #[arg(long, default_value_t = 100)]
    samples: u64,
    #[arg(long, default_value_t = 32)]
    subset_size: u32,
    /// Smallest fraction of samples that must reach the threshold.
    #[arg(long, default_value_t = 0.95)]
    min_pass_fraction: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest union size searched by pairwise-iterated.
    #[arg(long, default_value_t = hyperramsey::hypergraph::DEFAULT_RECOGNITION_GUARD)]
    max_union_vertices: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CliqueMode {
    Exact,
    Greedy,
}

#[derive(Args, Debug)]
struct CliqueArgs {
    mode: CliqueMode,
    #[arg(long = "in")]
    input: PathBuf,
    /// Stop the exact search at this size.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, default_value_t = 64)]
    max_n: u32,
    #[arg(long, default_value_t = 20)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExtractMode {
    Halving,
    Iterated,
}

#[derive(Args, Debug)]
struct ExtractArgs {
    mode: ExtractMode,
    #[arg(long = "in")]
    input: PathBuf,
    /// Largest red support searched for a certificate (iterated).
    #[arg(long, default_value_t = hyperramsey::hypergraph::DEFAULT_RECOGNITION_GUARD)]
    max_vertices: usize,
}

#[derive(Args, Debug)]
struct TreeInput {
    /// File holding a nested-parentheses tree such as `((0 1) 2)`.
    #[arg(long = "in", conflicts_with = "tree")]
    input: Option<PathBuf>,
    /// The tree given inline.
    #[arg(long)]
    tree: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Lowest,
    Highest,
}

#[derive(Subcommand, Debug)]
enum TreeCommand {
    /// Split tree of an integer set; with --a, classify nodes using the
    /// level colors of the rainbow coloring for --seed.
    Split {
        /// Comma-separated elements.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<u32>,
        #[arg(long)]
        ell: u32,
        #[arg(long, value_enum, default_value_t = Order::Lowest)]
        order: Order,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rotate imbalances away and print each step.
    RotateToBalance(TreeInput),
    /// Optimal score of the weight-budgeted LP.
    Score {
        #[command(flatten)]
        input: TreeInput,
        /// Budget, an integer or a fraction such as 3/2.
        #[arg(long)]
        weight: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code_for(&e))
        }
    }
}
