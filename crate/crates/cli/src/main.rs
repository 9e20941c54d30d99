use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use idealgraph::genus::DEFAULT_BUDGET;
use idealgraph::Error;

mod atlas;
mod commands;
mod resolve;

/// Zero-divisor graphs of finite commutative rings and their genus.
#[derive(Parser, Debug)]
#[command(name = "idealgraph", version, about)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Node budget for each genus search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(10_000..))]
    budget: u64,

    /// Write the main output (or the certificate, for `genus`) to a file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Print elapsed time on stderr.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Summary of a ring: order, units, zero-divisors, locality, labels.
    Ring {
        /// Catalog name, product of catalog names, or ring spec JSON file.
        ring: String,
    },
    /// Every ideal with its size and prime/radical/maximal flags.
    Ideals { ring: String },
    /// The graph Γ_I(R) with its invariants.
    Graph {
        ring: String,
        /// `#k`, `gen:a,b` or `factor:k`; omit for the zero ideal.
        ideal: Option<String>,
    },
    /// Genus bounds of Γ_I(R), or of a graph given as JSON.
    Genus {
        /// Ring; not used with `--graph`.
        ring: Option<String>,
        ideal: Option<String>,
        /// Graph JSON file (`{"vertices": [...], "edges": [[u, v], ...]}`).
        #[arg(long, conflicts_with = "ring")]
        graph: Option<PathBuf>,
    },
    /// Check a theorem (or `all`) over the catalog.
    Verify { theorem: String },
    /// CSV of invariants for every catalog ring and proper nonzero ideal.
    Atlas {
        /// Largest ring order to include.
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Keep only rings whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Csv,
    Table,
}

/// How a command ended, mapped onto the process exit code.
#[derive(Debug)]
pub enum Outcome {
    Success,
    Failed,
    Inconclusive,
}

pub struct Ctx {
    pub format: Option<Format>,
    pub budget: u64,
    pub output: Option<PathBuf>,
}

impl Ctx {
    /// Writes `text` to `--output` when given, else to stdout.
    pub fn emit(&self, text: &str) -> Result<(), Error> {
        match &self.output {
            Some(path) => write_file(path, text),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())
                    .map_err(|e| Error::Parse(e.to_string()))
            }
        }
    }
}

pub fn write_file(path: &std::path::Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let ctx = Ctx {
        format: cli.format,
        budget: cli.budget,
        output: cli.output,
    };
    let result = match cli.command {
        Command::Ring { ring } => commands::ring(&ctx, &ring),
        Command::Ideals { ring } => commands::ideals(&ctx, &ring),
        Command::Graph { ring, ideal } => commands::graph(&ctx, &ring, ideal.as_deref()),
        Command::Genus { ring, ideal, graph } => {
            commands::genus(&ctx, ring.as_deref(), ideal.as_deref(), graph.as_deref())
        }
        Command::Verify { theorem } => commands::verify(&ctx, &theorem),
        Command::Atlas { max_order, filter } => atlas::run(&ctx, max_order, filter.as_deref()),
    };
    if cli.timing {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Ok(Outcome::Inconclusive) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
