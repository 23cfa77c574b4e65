mod bench;
mod run;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chordless::cycles::normalize_by_id;
use chordless::foodweb::{niche_overlap, DirectedEdgeList};
use chordless::generate::{generate, Family};
use chordless::graph::CompactGraph;
use chordless::io::{load_edge_list, write_edge_list};
use chordless::labeling::degree_labeling;
use chordless::parallel::CapacityPolicy;

use run::{Engine, RunOptions};

#[derive(Parser)]
#[command(name = "chordless", version, about = "Enumerate the chordless cycles of a graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list.
    Generate {
        /// cycle:K, wheel:K, bipartite:AxB or grid:RxC
        spec: String,
        /// Output file (standard output when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate chordless cycles and print them with a summary line.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = EngineArg::Par)]
        engine: EngineArg,
        /// Persistent workers for the parallel engine.
        #[arg(long)]
        workers: Option<usize>,
        /// Count cycles without storing or printing them.
        #[arg(long)]
        count_only: bool,
        /// Print each cycle from its smallest vertex towards the smaller
        /// neighbour instead of in labeling order.
        #[arg(long)]
        canonical: bool,
        /// Sort the printed cycles lexicographically.
        #[arg(long)]
        sorted: bool,
        /// Write the per-round frontier/cycle sizes as CSV (parallel engine).
        #[arg(long, value_name = "FILE")]
        evolution: Option<PathBuf>,
        /// Expansion rounds (default n - 3).
        #[arg(long)]
        rounds: Option<usize>,
        /// Run every round even after the frontier empties.
        #[arg(long)]
        no_early_exit: bool,
        /// Fixed path-store capacity in rows; exceeding it exits with code 4.
        #[arg(long, value_name = "ROWS")]
        capacity: Option<usize>,
        /// Frontier size above which rounds are expanded slice by slice to
        /// bound memory.
        #[arg(long, value_name = "ROWS")]
        frontier_limit: Option<usize>,
    },
    /// Print the degree labeling as `vertex label` lines.
    Labels {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Time both engines over a set of graphs and print CSV.
    Bench(bench::BenchArgs),
}

#[derive(clap::Args)]
struct InputArgs {
    /// Edge-list file, `-` for standard input, or a generator spec such as grid:5x6.
    input: String,
    /// Read lines as `predator prey` arcs and enumerate the niche-overlap graph.
    #[arg(long)]
    niche_overlap: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Seq,
    Par,
}

/// Failure with its process exit code.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<chordless::Error> for CliError {
    fn from(e: chordless::Error) -> Self {
        use chordless::Error as E;
        let code = match e {
            E::InvalidParameter(_) => 2,
            E::Parse { .. } | E::SelfLoopRejected { .. } | E::InvalidVertex { .. } => 3,
            E::CapacityExceeded { .. } => 4,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self {
            code: 1,
            message: e.to_string(),
        }
    }
}

/// Loads a graph from a file, standard input, or a generator spec.
pub fn load_input(input: &str, niche: bool) -> Result<CompactGraph, CliError> {
    let reader: Box<dyn BufRead> = if input == "-" {
        Box::new(BufReader::new(io::stdin().lock()))
    } else if Path::new(input).exists() || !input.contains(':') {
        let file = File::open(input).map_err(|e| CliError {
            code: 1,
            message: format!("{input}: {e}"),
        })?;
        Box::new(BufReader::new(file))
    } else {
        if niche {
            return Err(CliError::usage("--niche-overlap needs a food-web file"));
        }
        let family: Family = input.parse()?;
        return Ok(generate(family)?);
    };
    if niche {
        Ok(niche_overlap(&DirectedEdgeList::load(reader)?)?)
    } else {
        Ok(load_edge_list(reader)?)
    }
}

fn cmd_generate(spec: &str, output: Option<&Path>) -> Result<(), CliError> {
    let family: Family = spec.parse()?;
    let edges = family.edges()?;
    match output {
        Some(path) => write_edge_list(BufWriter::new(File::create(path)?), edges)?,
        None => write_edge_list(BufWriter::new(io::stdout().lock()), edges)?,
    }
    Ok(())
}

fn cmd_labels(input: &InputArgs) -> Result<(), CliError> {
    let g = load_input(&input.input, input.niche_overlap)?;
    let labeling = degree_labeling(&g);
    let mut out = BufWriter::new(io::stdout().lock());
    for (v, l) in labeling.labels().iter().enumerate() {
        writeln!(out, "{v} {l}")?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    input: &InputArgs,
    engine: EngineArg,
    workers: Option<usize>,
    count_only: bool,
    canonical: bool,
    sorted: bool,
    evolution: Option<&Path>,
    rounds: Option<usize>,
    no_early_exit: bool,
    capacity: Option<usize>,
    frontier_limit: Option<usize>,
) -> Result<(), CliError> {
    let engine = match engine {
        EngineArg::Seq => {
            if evolution.is_some() {
                return Err(CliError::usage("--evolution needs --engine par"));
            }
            Engine::Sequential
        }
        EngineArg::Par => Engine::Parallel,
    };
    if workers == Some(0) {
        return Err(CliError::usage("--workers must be at least 1"));
    }
    if frontier_limit == Some(0) {
        return Err(CliError::usage("--frontier-limit must be at least 1"));
    }
    let g = load_input(&input.input, input.niche_overlap)?;
    let options = RunOptions {
        engine,
        workers,
        count_only,
        evolution_log: evolution.is_some(),
        rounds,
        early_exit: !no_early_exit,
        capacity: capacity.map(CapacityPolicy::Fixed),
        frontier_limit,
    };
    let outcome = run::run(&g, &input.input, &options)?;

    if let (Some(path), Some(log)) = (evolution, &outcome.log) {
        log.write_csv(BufWriter::new(File::create(path)?))?;
    }

    let mut out = BufWriter::new(io::stdout().lock());
    if !count_only {
        let mut lines: Vec<Vec<u32>> = outcome
            .cycles
            .iter()
            .map(|c| {
                if canonical {
                    normalize_by_id(c).expect("engine cycles are well formed")
                } else {
                    c.to_vec()
                }
            })
            .collect();
        if sorted {
            lines.sort_unstable();
        }
        for line in &lines {
            let text: Vec<String> = line.iter().map(u32::to_string).collect();
            writeln!(out, "{}", text.join(" "))?;
        }
    }
    let c = &outcome.cycles;
    writeln!(
        out,
        "triangles={} chordless_cycles={} total={}",
        c.triangle_count(),
        c.chordless_count(),
        c.total()
    )?;
    out.flush()?;
    eprintln!("{}", outcome.report);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate { spec, output } => cmd_generate(spec, output.as_deref()),
        Command::Labels { input } => cmd_labels(input),
        Command::Enumerate {
            input,
            engine,
            workers,
            count_only,
            canonical,
            sorted,
            evolution,
            rounds,
            no_early_exit,
            capacity,
            frontier_limit,
        } => cmd_enumerate(
            input,
            *engine,
            *workers,
            *count_only,
            *canonical,
            *sorted,
            evolution.as_deref(),
            *rounds,
            *no_early_exit,
            *capacity,
            *frontier_limit,
        ),
        Command::Bench(args) => bench::cmd_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("chordless: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
