use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chordless::graph::{build_compact, CompactGraph};

use crate::run::{run, Engine, RunOptions};
use crate::{load_input, CliError};

#[derive(clap::Args)]
pub struct BenchArgs {
    /// Edge-list files or generator specs.
    inputs: Vec<String>,
    /// Runs per engine and graph; the mean is reported.
    #[arg(long, default_value_t = 10)]
    repetitions: usize,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    count_only: bool,
    /// Also bench this many seeded random graphs G(n, p).
    #[arg(long, default_value_t = 0)]
    random: usize,
    #[arg(long, default_value_t = 20)]
    random_n: usize,
    #[arg(long, default_value_t = 0.3)]
    random_p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

pub const HEADER: &str =
    "graph,n,m,max_degree,triangles,chordless_cycles,seq_ms,par_ms,speedup";

fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> CompactGraph {
    let mut edges = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    build_compact(n, edges).expect("generated edges are in range")
}

fn bench_one(name: &str, g: &CompactGraph, args: &BenchArgs) -> Result<String, CliError> {
    let mut means = [0.0f64; 2];
    let mut counts = [(0u64, 0u64); 2];
    for (i, engine) in [Engine::Sequential, Engine::Parallel].into_iter().enumerate() {
        let options = RunOptions {
            workers: args.workers,
            count_only: args.count_only,
            ..RunOptions::new(engine)
        };
        let mut total = 0.0;
        for _ in 0..args.repetitions {
            let outcome = run(g, name, &options)?;
            total += outcome.report.total_ms;
            counts[i] = (outcome.report.triangles, outcome.report.chordless);
        }
        means[i] = total / args.repetitions as f64;
    }
    if counts[0] != counts[1] {
        return Err(CliError::usage(format!(
            "{name}: engines disagree ({:?} vs {:?})",
            counts[0], counts[1]
        )));
    }
    let speedup = if means[1] > 0.0 { means[0] / means[1] } else { f64::NAN };
    Ok(format!(
        "{name},{},{},{},{},{},{:.3},{:.3},{:.3}",
        g.n(),
        g.m(),
        g.max_degree(),
        counts[0].0,
        counts[0].1,
        means[0],
        means[1],
        speedup
    ))
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    if args.repetitions == 0 {
        return Err(CliError::usage("--repetitions must be at least 1"));
    }
    if args.workers == Some(0) {
        return Err(CliError::usage("--workers must be at least 1"));
    }
    if !(0.0..=1.0).contains(&args.random_p) {
        return Err(CliError::usage("--random-p must lie in [0, 1]"));
    }
    let mut out = io::stdout().lock();
    writeln!(out, "{HEADER}")?;
    for input in &args.inputs {
        let row = load_input(input, false).and_then(|g| bench_one(input, &g, args));
        match row {
            Ok(line) => writeln!(out, "{line}")?,
            Err(e) => eprintln!("chordless bench: skipping {input}: {}", e.message),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for i in 0..args.random {
        let g = random_graph(args.random_n, args.random_p, &mut rng);
        let name = format!("random-{}-{i}", args.seed);
        match bench_one(&name, &g, args) {
            Ok(line) => writeln!(out, "{line}")?,
            Err(e) => eprintln!("chordless bench: skipping {name}: {}", e.message),
        }
    }
    Ok(())
}
