//! Round-based coordinator: one stage-1 launch, then up to `n − 3`
//! stage-2 launches with the frontier double-buffered between them.

use std::io::{self, Write};

use crate::cycles::{reconstruct_order, CycleSet};
use crate::error::{Error, Result};
use crate::graph::CompactGraph;
use crate::labeling::Labeling;
use crate::parallel::kernels::{
    stage1_kernel, stage2_kernel, stage2_kernel_rows, CycleSink, RoundStats, Stage1Stats,
};
use crate::parallel::run_workers;
use crate::parallel::store::PathStore;
use crate::sequential::resolve_labeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacityPolicy {
    /// Start at `initial` rows and grow (at least doubling) whenever a
    /// launch overflows; the launch is then rerun.
    Grow { initial: usize },
    /// Never grow; an overflowing launch fails with `CapacityExceeded`.
    Fixed(usize),
}

impl Default for CapacityPolicy {
    fn default() -> Self {
        CapacityPolicy::Grow { initial: 1024 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelConfig {
    /// Persistent workers per launch.
    pub workers: usize,
    /// Stage-2 launches; `None` means `n − 3`.
    pub rounds: Option<usize>,
    /// Stop as soon as a round leaves the frontier empty.
    pub early_exit_check: bool,
    pub count_only: bool,
    pub evolution_log: bool,
    pub capacity: CapacityPolicy,
    /// Frontier rows above which [`Host::run`] stops expanding whole rounds
    /// and works through the frontier slice by slice, depth first. `None`
    /// keeps every round breadth-first.
    pub frontier_limit: Option<usize>,
}

/// Default for [`KernelConfig::frontier_limit`].
pub const DEFAULT_FRONTIER_LIMIT: usize = 1 << 20;

impl Default for KernelConfig {
    fn default() -> Self {
        Self {
            workers: crate::parallel::default_workers(),
            rounds: None,
            early_exit_check: true,
            count_only: false,
            evolution_log: false,
            capacity: CapacityPolicy::default(),
            frontier_limit: Some(DEFAULT_FRONTIER_LIMIT),
        }
    }
}

impl KernelConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::InvalidParameter("workers must be at least 1".into()));
        }
        if self.frontier_limit == Some(0) {
            return Err(Error::InvalidParameter("frontier limit must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvolutionRecord {
    /// 0 is the stage-1 result; `i` is the frontier after the i-th expansion.
    pub round: usize,
    pub frontier_size: usize,
    pub cycles_total: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EvolutionLog {
    records: Vec<EvolutionRecord>,
}

impl EvolutionLog {
    pub fn records(&self) -> &[EvolutionRecord] {
        &self.records
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "round,frontier_size,cycles_total")?;
        for r in &self.records {
            writeln!(out, "{},{},{}", r.round, r.frontier_size, r.cycles_total)?;
        }
        Ok(())
    }
}

#[derive(Debug)]
pub struct ParallelRun {
    pub cycles: CycleSet,
    pub log: EvolutionLog,
    pub stage1: Stage1Stats,
    pub round_stats: Vec<RoundStats>,
    /// Frontier size when the host loop stopped.
    pub final_frontier: usize,
}

/// Host state between launches. Drive it with [`stage1`](Host::stage1) and
/// [`step`](Host::step), or call [`host_enumerate`] to run it to completion.
pub struct Host<'g> {
    graph: &'g CompactGraph,
    labeling: Labeling,
    config: KernelConfig,
    frontier: PathStore,
    next: PathStore,
    cycles: CycleSink,
    rounds_limit: usize,
    round: usize,
    stage1: Option<Stage1Stats>,
    round_stats: Vec<RoundStats>,
    log: EvolutionLog,
    /// Unexpanded rows left behind by a sliced run at the round limit.
    leftover: usize,
}

impl<'g> Host<'g> {
    pub fn new(graph: &'g CompactGraph, labeling: Labeling, config: KernelConfig) -> Result<Self> {
        config.validate()?;
        if labeling.len() != graph.n() {
            return Err(Error::InvalidParameter("labeling size mismatch".into()));
        }
        let initial = match config.capacity {
            CapacityPolicy::Grow { initial } => initial.max(1),
            CapacityPolicy::Fixed(cap) => cap,
        };
        let n = graph.n();
        let cycles = if config.count_only {
            CycleSink::counting()
        } else {
            CycleSink::storing(PathStore::new(n, initial))
        };
        Ok(Self {
            graph,
            labeling,
            rounds_limit: config.rounds.unwrap_or(n.saturating_sub(3)),
            config,
            frontier: PathStore::new(n, initial),
            next: PathStore::new(n, initial),
            cycles,
            round: 0,
            stage1: None,
            round_stats: Vec::new(),
            log: EvolutionLog::default(),
            leftover: 0,
        })
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    /// The current read-only frontier `T`.
    pub fn frontier(&self) -> &PathStore {
        &self.frontier
    }

    pub fn cycles(&self) -> &CycleSink {
        &self.cycles
    }

    /// Stage-2 rounds completed so far.
    pub fn round(&self) -> usize {
        self.round
    }

    /// Runs `launch` into `next` and the cycle sink, growing and rerunning
    /// until nothing overflows.
    fn launch<S>(&mut self, launch: impl Fn(&Self) -> S) -> Result<S> {
        loop {
            let mark = self.cycles.mark();
            self.next.clear();
            let stats = launch(self);
            let over_next = self.next.overflowed();
            let over_cycles = self.cycles.overflowed();
            if !over_next && !over_cycles {
                return Ok(stats);
            }
            if let CapacityPolicy::Fixed(_) = self.config.capacity {
                let store = if over_next {
                    &self.next
                } else {
                    self.cycles.store().unwrap()
                };
                return Err(Error::CapacityExceeded {
                    capacity: store.capacity(),
                    requested: store.requested(),
                });
            }
            if over_next {
                let want = self.next.requested().max(self.next.capacity() * 2);
                self.next.grow(want);
            }
            if over_cycles {
                let store = self.cycles.store_mut().unwrap();
                let want = store.requested().max(store.capacity() * 2);
                store.grow(want);
            }
            self.cycles.rollback(mark);
        }
    }

    fn record(&mut self) {
        if self.config.evolution_log {
            self.log.records.push(EvolutionRecord {
                round: self.round,
                frontier_size: self.frontier.len(),
                cycles_total: self.cycles.total(),
            });
        }
    }

    /// Stage 1 over `n · Δ²` lanes: triangles go to the cycle sink, initial
    /// triplets become the frontier.
    pub fn stage1(&mut self) -> Result<Stage1Stats> {
        if let Some(stats) = self.stage1 {
            return Ok(stats);
        }
        let workers = self.config.workers;
        let stats = self.launch(|host| {
            run_workers(workers, |w| {
                stage1_kernel(host.graph, &host.labeling, w, workers, &host.cycles, &host.next)
            })
            .into_iter()
            .fold(Stage1Stats::default(), |a, b| a + b)
        })?;
        std::mem::swap(&mut self.frontier, &mut self.next);
        self.next.clear();
        self.stage1 = Some(stats);
        self.record();
        Ok(stats)
    }

    /// Runs one breadth-first stage-2 round, or returns `None` once the round
    /// budget is spent (or the frontier is empty and early exit is on).
    /// `frontier_limit` is not consulted here; see [`run`](Host::run).
    pub fn step(&mut self) -> Result<Option<RoundStats>> {
        if self.stage1.is_none() {
            self.stage1()?;
        }
        if self.round >= self.rounds_limit
            || (self.config.early_exit_check && self.frontier.is_empty())
        {
            return Ok(None);
        }
        self.next.grow(self.frontier.len());
        let workers = self.config.workers;
        let stats = self.launch(|host| {
            run_workers(workers, |w| {
                stage2_kernel(
                    host.graph,
                    &host.labeling,
                    &host.frontier,
                    w,
                    workers,
                    &host.cycles,
                    &host.next,
                )
            })
            .into_iter()
            .fold(RoundStats::default(), |a, b| a + b)
        })?;
        // All workers have joined; only now is it safe to swap buffers.
        std::mem::swap(&mut self.frontier, &mut self.next);
        self.next.clear();
        self.round += 1;
        self.round_stats.push(stats);
        self.record();
        Ok(Some(stats))
    }

    /// Runs stage 1 if needed and then every remaining round.
    ///
    /// Once the frontier exceeds `frontier_limit` rows the remaining rounds
    /// are expanded a slice of at most `limit / Δ` rows at a time, and each
    /// slice's descendants are finished before the next slice. Every depth
    /// sees the same set of paths as in the breadth-first order, so the
    /// cycles, per-round statistics and evolution log are unchanged. After
    /// a sliced run [`frontier`](Host::frontier) is empty.
    pub fn run(&mut self) -> Result<()> {
        if self.stage1.is_none() {
            self.stage1()?;
        }
        loop {
            if let Some(limit) = self.config.frontier_limit {
                if self.frontier.len() > limit {
                    return self.run_sliced(limit);
                }
            }
            if self.step()?.is_none() {
                return Ok(());
            }
        }
    }

    fn run_sliced(&mut self, limit: usize) -> Result<()> {
        let n = self.graph.n();
        let slice = (limit / self.graph.max_degree().max(1)).max(1);
        let fixed = match self.config.capacity {
            CapacityPolicy::Fixed(cap) => cap,
            CapacityPolicy::Grow { .. } => 0,
        };
        let start = self.round;
        let total_before = self.cycles.total();
        // Index k holds the totals for round start + k + 1.
        let mut sizes: Vec<usize> = Vec::new();
        let mut stats: Vec<RoundStats> = Vec::new();
        let root = std::mem::replace(&mut self.frontier, PathStore::new(n, 0));
        let mut stack = vec![(root, 0usize, start)];
        let mut spare: Vec<PathStore> = Vec::new();
        let workers = self.config.workers;
        // A path extends through at most Δ − 1 neighbours of its last vertex.
        let fan_out = self.graph.max_degree().saturating_sub(1).max(1);

        while let Some((store, cursor, round)) = stack.last_mut() {
            if *round >= self.rounds_limit || *cursor >= store.len() {
                if *round >= self.rounds_limit {
                    self.leftover += store.len();
                }
                spare.extend(stack.pop().map(|(s, _, _)| s));
                continue;
            }
            let rows = *cursor..(*cursor + slice).min(store.len());
            *cursor = rows.end;
            let k = *round - start;

            std::mem::swap(&mut self.frontier, store);
            let want = if fixed > 0 { fixed } else { rows.len() * fan_out };
            self.next = match spare.pop() {
                Some(mut s) => {
                    s.clear();
                    s.grow(want);
                    s
                }
                None => PathStore::new(n, want),
            };
            let launched = self.launch(|host| {
                run_workers(workers, |w| {
                    stage2_kernel_rows(
                        host.graph,
                        &host.labeling,
                        &host.frontier,
                        rows.clone(),
                        w,
                        workers,
                        &host.cycles,
                        &host.next,
                    )
                })
                .into_iter()
                .fold(RoundStats::default(), |a, b| a + b)
            });
            std::mem::swap(&mut self.frontier, store);
            let round_stats = launched?;
            let child = std::mem::replace(&mut self.next, PathStore::new(n, 0));

            if sizes.len() <= k {
                sizes.resize(k + 1, 0);
                stats.resize(k + 1, RoundStats::default());
            }
            sizes[k] += child.len();
            stats[k] = stats[k] + round_stats;
            if child.is_empty() {
                spare.push(child);
            } else {
                let next_round = *round + 1;
                stack.push((child, 0, next_round));
            }
        }

        let executed = if self.config.early_exit_check {
            sizes.len()
        } else {
            self.rounds_limit.saturating_sub(start).max(sizes.len())
        };
        sizes.resize(executed, 0);
        stats.resize(executed, RoundStats::default());
        let mut total = total_before;
        for (size, round_stats) in sizes.into_iter().zip(stats) {
            total += round_stats.closed;
            self.round += 1;
            self.round_stats.push(round_stats);
            if self.config.evolution_log {
                self.log.records.push(EvolutionRecord {
                    round: self.round,
                    frontier_size: size,
                    cycles_total: total,
                });
            }
        }
        self.next = PathStore::new(n, 0);
        Ok(())
    }

    /// Recovers vertex order for every stored cycle and returns the result.
    pub fn finish(self) -> Result<ParallelRun> {
        let mut cycles = CycleSet::new(self.config.count_only);
        match self.cycles.store() {
            None => cycles.add_counts(self.cycles.triangles(), self.cycles.longer()),
            Some(store) => {
                let mut members = vec![0u64; store.words_per_row()];
                for row in 0..store.len() {
                    store.copy_row(row, &mut members);
                    let ends = store.ends(row);
                    let order = reconstruct_order(self.graph, &members, ends.first, ends.last)?;
                    debug_assert_eq!(order[1], ends.second);
                    cycles.push(&order);
                }
            }
        }
        Ok(ParallelRun {
            cycles,
            log: self.log,
            stage1: self.stage1.unwrap_or_default(),
            round_stats: self.round_stats,
            final_frontier: self.frontier.len() + self.leftover,
        })
    }
}

/// Runs both stages to completion with the given labeling.
pub fn host_enumerate_with(
    g: &CompactGraph,
    labeling: Labeling,
    config: KernelConfig,
) -> Result<ParallelRun> {
    let mut host = Host::new(g, labeling, config)?;
    host.run()?;
    host.finish()
}

/// Runs both stages to completion, computing the degree labeling unless one
/// is attached to the graph.
pub fn host_enumerate(g: &CompactGraph, config: KernelConfig) -> Result<ParallelRun> {
    host_enumerate_with(g, resolve_labeling(g), config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::graph::build_compact;

    fn cfg() -> KernelConfig {
        KernelConfig {
            evolution_log: true,
            ..KernelConfig::default()
        }
    }

    #[test]
    fn tree_is_empty_after_stage1() {
        let g = build_compact(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let run = host_enumerate(
            &g,
            KernelConfig {
                early_exit_check: false,
                ..cfg()
            },
        )
        .unwrap();
        assert_eq!(run.cycles.total(), 0);
        let log = run.log.records();
        assert_eq!(log[0].frontier_size, 0);
        assert_eq!(log[1].round, 1);
        assert_eq!(log[1].frontier_size, 0);
        assert_eq!(log.len(), 4);
    }

    #[test]
    fn grid_5x6_both_modes() {
        let g = generate(Family::Grid(5, 6)).unwrap();
        let run = host_enumerate(&g, cfg()).unwrap();
        assert_eq!(run.cycles.chordless_count(), 749);
        assert_eq!(run.cycles.iter().count(), 749);
        let counted = host_enumerate(
            &g,
            KernelConfig {
                count_only: true,
                ..cfg()
            },
        )
        .unwrap();
        assert_eq!(counted.cycles.chordless_count(), 749);
        assert!(counted.cycles.is_count_only());
    }

    #[test]
    fn tiny_capacity_grows() {
        let g = generate(Family::Grid(4, 5)).unwrap();
        let reference = host_enumerate(&g, cfg()).unwrap();
        let grown = host_enumerate(
            &g,
            KernelConfig {
                capacity: CapacityPolicy::Grow { initial: 1 },
                ..cfg()
            },
        )
        .unwrap();
        assert_eq!(grown.cycles.sorted(), reference.cycles.sorted());
        assert_eq!(grown.log, reference.log);
    }

    #[test]
    fn fixed_capacity_fails() {
        let g = generate(Family::Grid(4, 5)).unwrap();
        let err = host_enumerate(
            &g,
            KernelConfig {
                capacity: CapacityPolicy::Fixed(2),
                ..cfg()
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::CapacityExceeded { capacity: 2, .. }));
    }

    fn assert_same_run(a: &ParallelRun, b: &ParallelRun) {
        assert_eq!(a.cycles.sorted(), b.cycles.sorted());
        assert_eq!(a.log, b.log);
        assert_eq!(a.round_stats, b.round_stats);
        assert_eq!(a.final_frontier, b.final_frontier);
    }

    #[test]
    fn sliced_matches_breadth_first() {
        for family in [Family::Grid(5, 6), Family::Wheel(9), Family::CompleteBipartite(4, 5)] {
            let g = generate(family).unwrap();
            let bfs = host_enumerate(&g, KernelConfig { frontier_limit: None, ..cfg() }).unwrap();
            for limit in [1, 3, 16] {
                let sliced = host_enumerate(
                    &g,
                    KernelConfig {
                        frontier_limit: Some(limit),
                        ..cfg()
                    },
                )
                .unwrap();
                assert_same_run(&bfs, &sliced);
            }
        }
    }

    #[test]
    fn sliced_round_limits() {
        let g = generate(Family::Grid(4, 5)).unwrap();
        for (rounds, early_exit) in [(Some(4), true), (Some(4), false), (None, false)] {
            let base = KernelConfig {
                rounds,
                early_exit_check: early_exit,
                ..cfg()
            };
            let bfs = host_enumerate(&g, KernelConfig { frontier_limit: None, ..base.clone() })
                .unwrap();
            let sliced = host_enumerate(
                &g,
                KernelConfig {
                    frontier_limit: Some(2),
                    capacity: CapacityPolicy::Grow { initial: 1 },
                    ..base
                },
            )
            .unwrap();
            assert_same_run(&bfs, &sliced);
        }
    }

    #[test]
    fn zero_workers_rejected() {
        let g = generate(Family::Cycle(4)).unwrap();
        assert!(matches!(
            host_enumerate(&g, cfg().with_workers(0)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn csv_format() {
        let g = generate(Family::Cycle(5)).unwrap();
        let run = host_enumerate(&g, cfg()).unwrap();
        let mut buf = Vec::new();
        run.log.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("round,frontier_size,cycles_total"));
        assert_eq!(lines.next(), Some("0,1,0"));
        assert_eq!(text.lines().last(), Some("2,0,1"));
    }
}
