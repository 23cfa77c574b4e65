//! The two kernels, written as pure functions of a global lane index over
//! immutable shared state. Their only side effects are reservation appends
//! into a [`PathStore`] or a [`CycleSink`].

use std::ops::Range;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::bitset;
use crate::graph::CompactGraph;
use crate::labeling::Labeling;
use crate::parallel::store::{PathStore, RowEnds};
use crate::sequential::{classify, Candidate, Triplet};
use crate::VertexId;

/// Splits a stage-1 lane index into (centre, first slot, second slot).
#[inline]
pub fn stage1_decompose(gid: u64, max_degree: usize) -> (usize, usize, usize) {
    let d = max_degree as u64;
    let sq = d * d;
    let center = gid / sq;
    let x_slot = (gid - center * sq) / d;
    let y_slot = gid % d;
    (center as usize, x_slot as usize, y_slot as usize)
}

/// Size of the stage-1 lane space, `n · Δ²`.
pub fn stage1_lanes(g: &CompactGraph) -> u64 {
    let d = g.max_degree() as u64;
    g.n() as u64 * d * d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage1Lane {
    /// A slot ran past the centre's degree, or the label order failed.
    Idle,
    Triangle(Triplet),
    Path(Triplet),
}

/// Evaluates one stage-1 lane.
#[inline]
pub fn stage1_lane(g: &CompactGraph, labeling: &Labeling, gid: u64) -> Stage1Lane {
    let (center, x_slot, y_slot) = stage1_decompose(gid, g.max_degree());
    let u = center as VertexId;
    let nbrs = g.neighbors_unchecked(u);
    let (Some(&x), Some(&y)) = (nbrs.get(x_slot), nbrs.get(y_slot)) else {
        return Stage1Lane::Idle;
    };
    let (lu, lx, ly) = (labeling.label(u), labeling.label(x), labeling.label(y));
    if !(lu < lx && lx < ly) {
        return Stage1Lane::Idle;
    }
    let t = Triplet { x, u, y };
    if g.is_adjacent_unchecked(x, y) {
        Stage1Lane::Triangle(t)
    } else {
        Stage1Lane::Path(t)
    }
}

/// Destination for closed cycles: counters always, rows unless count-only.
#[derive(Debug)]
pub struct CycleSink {
    store: Option<PathStore>,
    triangles: AtomicU64,
    longer: AtomicU64,
}

/// Counter snapshot used to roll a sink back before a round is rerun.
#[derive(Debug, Clone, Copy)]
pub struct SinkMark {
    rows: usize,
    triangles: u64,
    longer: u64,
}

impl CycleSink {
    pub fn counting() -> Self {
        Self {
            store: None,
            triangles: AtomicU64::new(0),
            longer: AtomicU64::new(0),
        }
    }

    pub fn storing(store: PathStore) -> Self {
        Self {
            store: Some(store),
            ..Self::counting()
        }
    }

    pub fn store(&self) -> Option<&PathStore> {
        self.store.as_ref()
    }

    pub fn store_mut(&mut self) -> Option<&mut PathStore> {
        self.store.as_mut()
    }

    pub fn triangles(&self) -> u64 {
        self.triangles.load(Ordering::Acquire)
    }

    pub fn longer(&self) -> u64 {
        self.longer.load(Ordering::Acquire)
    }

    pub fn total(&self) -> u64 {
        self.triangles() + self.longer()
    }

    pub fn overflowed(&self) -> bool {
        self.store.as_ref().is_some_and(PathStore::overflowed)
    }

    /// Records a closed cycle of `len` vertices. A full store still counts
    /// the cycle; the host sees the overflow and reruns the round.
    #[inline]
    pub fn push(&self, members: &[u64], ends: RowEnds, len: usize) {
        let counter = if len == 3 { &self.triangles } else { &self.longer };
        counter.fetch_add(1, Ordering::Relaxed);
        if let Some(store) = &self.store {
            let _ = store.append_reserved(members, ends);
        }
    }

    pub fn mark(&self) -> SinkMark {
        SinkMark {
            rows: self.store.as_ref().map_or(0, PathStore::requested),
            triangles: self.triangles(),
            longer: self.longer(),
        }
    }

    pub fn rollback(&mut self, mark: SinkMark) {
        if let Some(store) = &mut self.store {
            store.truncate(mark.rows);
        }
        *self.triangles.get_mut() = mark.triangles;
        *self.longer.get_mut() = mark.longer;
    }
}

/// Per-worker tallies of one stage-1 launch.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stage1Stats {
    pub lanes: u64,
    pub triangles: u64,
    pub paths: u64,
}

impl std::ops::Add for Stage1Stats {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            lanes: self.lanes + o.lanes,
            triangles: self.triangles + o.triangles,
            paths: self.paths + o.paths,
        }
    }
}

/// One persistent stage-1 worker: lanes `worker, worker + workers, ...`.
pub fn stage1_kernel(
    g: &CompactGraph,
    labeling: &Labeling,
    worker: usize,
    workers: usize,
    cycles: &CycleSink,
    frontier: &PathStore,
) -> Stage1Stats {
    let total = stage1_lanes(g);
    let mut stats = Stage1Stats::default();
    let mut members = vec![0u64; frontier.words_per_row()];
    let mut gid = worker as u64;
    while gid < total {
        stats.lanes += 1;
        match stage1_lane(g, labeling, gid) {
            Stage1Lane::Idle => {}
            Stage1Lane::Triangle(t) => {
                stats.triangles += 1;
                let ends = write_triplet(&mut members, t);
                cycles.push(&members, ends, 3);
            }
            Stage1Lane::Path(t) => {
                stats.paths += 1;
                let ends = write_triplet(&mut members, t);
                let _ = frontier.append_reserved(&members, ends);
            }
        }
        gid += workers as u64;
    }
    stats
}

fn write_triplet(members: &mut [u64], t: Triplet) -> RowEnds {
    members.fill(0);
    for v in t.as_array() {
        bitset::insert(members, v);
    }
    RowEnds {
        first: t.x,
        second: t.u,
        last: t.y,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage2Lane {
    /// Slot past the last vertex's degree.
    Idle,
    /// Candidate on the path, labelled too low, or it would form a chord.
    Rejected,
    Closed { path: usize, v: VertexId },
    Extended { path: usize, v: VertexId },
}

/// Evaluates one stage-2 lane. `scratch` receives the worker-private copy of
/// the selected path's bitmap.
#[inline]
pub fn stage2_lane(
    g: &CompactGraph,
    labeling: &Labeling,
    frontier: &PathStore,
    gid: u64,
    scratch: &mut [u64],
) -> Stage2Lane {
    let d = g.max_degree() as u64;
    let path = (gid / d) as usize;
    let slot = (gid % d) as usize;
    let ends = frontier.ends(path);
    let Some(&v) = g.neighbors_unchecked(ends.last).get(slot) else {
        return Stage2Lane::Idle;
    };
    frontier.copy_row(path, scratch);
    if bitset::contains(scratch, v) || labeling.label(v) <= labeling.label(ends.second) {
        return Stage2Lane::Rejected;
    }
    match classify(g, scratch, ends.first, ends.last, v) {
        Candidate::Rejected => Stage2Lane::Rejected,
        Candidate::Closes => Stage2Lane::Closed { path, v },
        Candidate::Extends => Stage2Lane::Extended { path, v },
    }
}

/// Per-worker tallies of one stage-2 round. `lanes` always equals the sum of
/// the four outcome counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RoundStats {
    pub lanes: u64,
    pub idle: u64,
    pub rejected: u64,
    pub closed: u64,
    pub extended: u64,
}

impl std::ops::Add for RoundStats {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            lanes: self.lanes + o.lanes,
            idle: self.idle + o.idle,
            rejected: self.rejected + o.rejected,
            closed: self.closed + o.closed,
            extended: self.extended + o.extended,
        }
    }
}

/// One persistent stage-2 worker striding over `|T| · Δ` lanes.
pub fn stage2_kernel(
    g: &CompactGraph,
    labeling: &Labeling,
    frontier: &PathStore,
    worker: usize,
    workers: usize,
    cycles: &CycleSink,
    next: &PathStore,
) -> RoundStats {
    let rows = 0..frontier.len();
    stage2_kernel_rows(g, labeling, frontier, rows, worker, workers, cycles, next)
}

/// [`stage2_kernel`] restricted to the frontier rows in `rows`; the lanes
/// are `rows.len() · Δ` starting at gid `rows.start · Δ`.
#[allow(clippy::too_many_arguments)]
pub fn stage2_kernel_rows(
    g: &CompactGraph,
    labeling: &Labeling,
    frontier: &PathStore,
    rows: Range<usize>,
    worker: usize,
    workers: usize,
    cycles: &CycleSink,
    next: &PathStore,
) -> RoundStats {
    let d = g.max_degree() as u64;
    let base = rows.start as u64 * d;
    let end = rows.end as u64 * d;
    let mut stats = RoundStats::default();
    let mut scratch = vec![0u64; frontier.words_per_row()];
    let mut gid = base + worker as u64;
    while gid < end {
        stats.lanes += 1;
        match stage2_lane(g, labeling, frontier, gid, &mut scratch) {
            Stage2Lane::Idle => stats.idle += 1,
            Stage2Lane::Rejected => stats.rejected += 1,
            Stage2Lane::Closed { path, v } => {
                stats.closed += 1;
                let ends = frontier.ends(path);
                let len = bitset::popcount(&scratch) + 1;
                bitset::insert(&mut scratch, v);
                cycles.push(&scratch, RowEnds { last: v, ..ends }, len);
            }
            Stage2Lane::Extended { path, v } => {
                stats.extended += 1;
                let ends = frontier.ends(path);
                bitset::insert(&mut scratch, v);
                let _ = next.append_reserved(&scratch, RowEnds { last: v, ..ends });
            }
        }
        gid += workers as u64;
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::VertexSet;
    use crate::graph::build_compact;

    #[test]
    fn decompose_examples() {
        assert_eq!(stage1_decompose(1, 3), (0, 0, 1));
        assert_eq!(stage1_decompose(0, 3), (0, 0, 0));
        let (n, d) = (6u64, 3usize);
        assert_eq!(stage1_decompose(n * 9 - 1, d), (5, 2, 2));
        // Exhaustive: the lane space is a bijection onto centre × slot × slot.
        let mut seen = std::collections::HashSet::new();
        for gid in 0..n * 9 {
            let (c, a, b) = stage1_decompose(gid, d);
            assert!(c < 6 && a < d && b < d);
            assert!(seen.insert((c, a, b)));
        }
    }

    /// The compact-representation example graph, padded with isolated
    /// vertices so vertex 3 can carry label 14.
    fn csr_example() -> CompactGraph {
        build_compact(15, [(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn worked_example_lane() {
        let g = csr_example();
        assert_eq!(g.max_degree(), 3);
        let mut labels: Vec<u32> = (0..15).collect();
        labels.swap(3, 14);
        let labeling = Labeling::from_labels(labels).unwrap();
        assert_eq!(labeling.label(3), 14);
        assert_eq!(
            stage1_lane(&g, &labeling, 1),
            Stage1Lane::Path(Triplet { x: 1, u: 0, y: 3 })
        );
        // gid 0 pairs vertex 1 with itself.
        assert_eq!(stage1_lane(&g, &labeling, 0), Stage1Lane::Idle);
        // gid 3 is (x, y) = (3, 1): label order fails.
        assert_eq!(stage1_lane(&g, &labeling, 3), Stage1Lane::Idle);
        // gid 2 has y slot 2, past vertex 0's degree.
        assert_eq!(stage1_lane(&g, &labeling, 2), Stage1Lane::Idle);
    }

    #[test]
    fn c4_expansion_lanes() {
        let g = build_compact(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let labeling = Labeling::from_labels(vec![0, 1, 2, 3]).unwrap();
        let frontier = PathStore::new(4, 1);
        let set = VertexSet::from_vertices(4, [1, 0, 3]);
        frontier
            .append_reserved(set.words(), RowEnds { first: 1, second: 0, last: 3 })
            .unwrap();
        let mut scratch = vec![0; 1];
        // Block of vertex 3 is [0, 2]: slot 0 is v=0 (on the path), slot 1 is v=2.
        assert_eq!(
            stage2_lane(&g, &labeling, &frontier, 0, &mut scratch),
            Stage2Lane::Rejected
        );
        assert_eq!(
            stage2_lane(&g, &labeling, &frontier, 1, &mut scratch),
            Stage2Lane::Closed { path: 0, v: 2 }
        );

        let sink = CycleSink::storing(PathStore::new(4, 4));
        let next = PathStore::new(4, 4);
        let stats = stage2_kernel(&g, &labeling, &frontier, 0, 1, &sink, &next);
        assert_eq!(stats.closed, 1);
        assert_eq!(stats.lanes, stats.idle + stats.rejected + stats.closed + stats.extended);
        assert!(next.is_empty());
        let store = sink.store().unwrap();
        assert_eq!(store.len(), 1);
        let order = crate::cycles::reconstruct_order(&g, &store.row(0), 1, 2).unwrap();
        assert_eq!(order, vec![1, 0, 3, 2]);
        assert_eq!(sink.longer(), 1);
    }

    #[test]
    fn sink_rollback() {
        let mut sink = CycleSink::storing(PathStore::new(4, 1));
        let mark = sink.mark();
        let bits = [0b111u64];
        let ends = RowEnds { first: 0, second: 1, last: 2 };
        sink.push(&bits, ends, 3);
        sink.push(&bits, ends, 3);
        assert!(sink.overflowed());
        assert_eq!(sink.triangles(), 2);
        sink.rollback(mark);
        assert!(!sink.overflowed());
        assert_eq!(sink.total(), 0);
    }
}
