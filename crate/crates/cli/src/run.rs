use std::fmt;
use std::time::Instant;

use chordless::graph::CompactGraph;
use chordless::labeling::degree_labeling;
use chordless::parallel::{CapacityPolicy, EvolutionLog, Host, KernelConfig};
use chordless::sequential::{expand_triplets, find_triplets};
use chordless::CycleSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Sequential,
    Parallel,
}

impl Engine {
    pub fn id(self) -> &'static str {
        match self {
            Engine::Sequential => "seq",
            Engine::Parallel => "par",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub engine: Engine,
    pub workers: Option<usize>,
    pub count_only: bool,
    pub evolution_log: bool,
    pub rounds: Option<usize>,
    pub early_exit: bool,
    pub capacity: Option<CapacityPolicy>,
    pub frontier_limit: Option<usize>,
}

impl RunOptions {
    pub fn new(engine: Engine) -> Self {
        Self {
            engine,
            workers: None,
            count_only: false,
            evolution_log: false,
            rounds: None,
            early_exit: true,
            capacity: None,
            frontier_limit: None,
        }
    }
}

/// One row of timing and count output. Times are local wall-clock.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub triangles: u64,
    pub chordless: u64,
    pub labeling_ms: f64,
    pub stage1_ms: f64,
    pub rounds_ms: f64,
    pub total_ms: f64,
    pub engine: &'static str,
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph={} n={} m={} max_degree={} engine={} triangles={} chordless_cycles={} \
             labeling_ms={:.3} stage1_ms={:.3} rounds_ms={:.3} total_ms={:.3}",
            self.graph,
            self.n,
            self.m,
            self.max_degree,
            self.engine,
            self.triangles,
            self.chordless,
            self.labeling_ms,
            self.stage1_ms,
            self.rounds_ms,
            self.total_ms
        )
    }
}

pub struct Outcome {
    pub cycles: CycleSet,
    pub log: Option<EvolutionLog>,
    pub report: RunReport,
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

pub fn run(g: &CompactGraph, name: &str, options: &RunOptions) -> chordless::Result<Outcome> {
    let start = Instant::now();
    let t = Instant::now();
    let labeling = degree_labeling(g);
    let labeling_ms = ms(t);

    let (cycles, log, stage1_ms, rounds_ms) = match options.engine {
        Engine::Sequential => {
            let t = Instant::now();
            let (triangles, triplets) = find_triplets(g, &labeling);
            let mut cycles = CycleSet::new(options.count_only);
            for tri in &triangles {
                cycles.push(&tri.as_array());
            }
            let stage1_ms = ms(t);
            let t = Instant::now();
            expand_triplets(g, &labeling, &triplets, &mut cycles);
            (cycles, None, stage1_ms, ms(t))
        }
        Engine::Parallel => {
            let defaults = KernelConfig::default();
            let config = KernelConfig {
                workers: options.workers.unwrap_or(defaults.workers),
                rounds: options.rounds,
                early_exit_check: options.early_exit,
                count_only: options.count_only,
                evolution_log: options.evolution_log,
                capacity: options.capacity.unwrap_or(defaults.capacity),
                frontier_limit: options.frontier_limit.or(defaults.frontier_limit),
            };
            let mut host = Host::new(g, labeling, config)?;
            let t = Instant::now();
            host.stage1()?;
            let stage1_ms = ms(t);
            let t = Instant::now();
            host.run()?;
            let rounds_ms = ms(t);
            let run = host.finish()?;
            let log = options.evolution_log.then_some(run.log);
            (run.cycles, log, stage1_ms, rounds_ms)
        }
    };
    let report = RunReport {
        graph: name.to_string(),
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        triangles: cycles.triangle_count(),
        chordless: cycles.chordless_count(),
        labeling_ms,
        stage1_ms,
        rounds_ms,
        total_ms: ms(start),
        engine: options.engine.id(),
    };
    Ok(Outcome {
        cycles,
        log,
        report,
    })
}
