//! Two-stage data-parallel engine.
//!
//! Stage 1 maps every lane of an `n · Δ²` index space to a (centre, slot,
//! slot) wedge and emits triangles and initial triplets. Stage 2 maps
//! `|T| · Δ` lanes to (path, neighbour slot) pairs and either closes a
//! cycle, extends the path into the next frontier, or drops the lane.
//! Workers are persistent: worker `w` of `W` visits lanes `w, w + W, ...`.
//!
//! With the `parallel` feature the workers run on the rayon pool; without
//! it they run one after another. Results are identical as sets.

mod host;
mod kernels;
mod store;

pub use host::{
    host_enumerate, host_enumerate_with, CapacityPolicy, EvolutionLog, EvolutionRecord, Host,
    KernelConfig, ParallelRun, DEFAULT_FRONTIER_LIMIT,
};
pub use kernels::{
    stage1_decompose, stage1_kernel, stage1_lane, stage1_lanes, stage2_kernel, stage2_kernel_rows,
    stage2_lane,
    CycleSink, RoundStats, SinkMark, Stage1Lane, Stage1Stats, Stage2Lane,
};
pub use store::{PathStore, RowEnds};

/// Worker count used when none is configured.
pub fn default_workers() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Runs `f(0..workers)` and collects the per-worker results in worker order.
pub(crate) fn run_workers<R, F>(workers: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..workers).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..workers).map(f).collect()
    }
}
