//! Compact (CSR-style) immutable graph.
//!
//! Three parallel vectors: `offsets` (one entry per vertex plus a sentinel),
//! `adjacency` (every undirected edge stored in both endpoint blocks, each
//! block sorted ascending) and `labels` (the degree labeling, zero until one
//! is attached).

use crate::error::{Error, Result};
use crate::labeling::Labeling;
use crate::VertexId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactGraph {
    offsets: Vec<u32>,
    adjacency: Vec<VertexId>,
    labels: Vec<u32>,
    labeled: bool,
    max_degree: usize,
}

/// Builds the compact representation from unordered pairs.
///
/// Duplicate pairs (in either orientation) collapse to one edge. Self-loops
/// and out-of-range endpoints are rejected.
pub fn build_compact<I>(n: usize, edges: I) -> Result<CompactGraph>
where
    I: IntoIterator<Item = (VertexId, VertexId)>,
{
    if n > VertexId::MAX as usize {
        return Err(Error::InvalidParameter(format!(
            "{n} vertices exceed the 32-bit index width"
        )));
    }
    let mut pairs = Vec::new();
    for (a, b) in edges {
        for v in [a, b] {
            if v as usize >= n {
                return Err(Error::InvalidVertex { vertex: v as u64, n });
            }
        }
        if a == b {
            return Err(Error::SelfLoopRejected { vertex: a, line: None });
        }
        pairs.push((a.min(b), a.max(b)));
    }
    pairs.sort_unstable();
    pairs.dedup();
    if pairs.len() * 2 > u32::MAX as usize {
        return Err(Error::InvalidParameter(format!(
            "{} edges exceed the 32-bit index width",
            pairs.len()
        )));
    }

    let mut degree = vec![0u32; n];
    for &(a, b) in &pairs {
        degree[a as usize] += 1;
        degree[b as usize] += 1;
    }
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0u32);
    for d in &degree {
        offsets.push(offsets.last().unwrap() + d);
    }
    let mut cursor: Vec<u32> = offsets[..n].to_vec();
    let mut adjacency = vec![0; pairs.len() * 2];
    // Pairs are sorted by (low, high), so block `v` receives every (a, v)
    // with a < v in increasing a, then every (v, b) in increasing b: each
    // block comes out ascending without a second sort.
    for &(a, b) in &pairs {
        adjacency[cursor[a as usize] as usize] = b;
        cursor[a as usize] += 1;
        adjacency[cursor[b as usize] as usize] = a;
        cursor[b as usize] += 1;
    }
    let max_degree = degree.iter().copied().max().unwrap_or(0) as usize;
    Ok(CompactGraph {
        offsets,
        adjacency,
        labels: vec![0; n],
        labeled: false,
        max_degree,
    })
}

impl CompactGraph {
    /// Vertex count `n`.
    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Edge count `m`.
    #[inline]
    pub fn m(&self) -> usize {
        self.adjacency.len() / 2
    }

    /// Maximum degree Δ.
    #[inline]
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    pub fn adjacency(&self) -> &[VertexId] {
        &self.adjacency
    }

    /// Degree labels; all zero until [`attach_labels`](Self::attach_labels).
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn is_labeled(&self) -> bool {
        self.labeled
    }

    pub fn attach_labels(&mut self, labeling: &Labeling) {
        assert_eq!(labeling.len(), self.n(), "labeling size mismatch");
        self.labels.copy_from_slice(labeling.labels());
        self.labeled = true;
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if (v as usize) < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v as u64,
                n: self.n(),
            })
        }
    }

    /// Sorted neighbour block of `u`.
    pub fn neighbors(&self, u: VertexId) -> Result<&[VertexId]> {
        self.check(u)?;
        Ok(self.neighbors_unchecked(u))
    }

    #[inline]
    pub fn neighbors_unchecked(&self, u: VertexId) -> &[VertexId] {
        let u = u as usize;
        &self.adjacency[self.offsets[u] as usize..self.offsets[u + 1] as usize]
    }

    #[inline]
    pub fn degree(&self, u: VertexId) -> usize {
        let u = u as usize;
        (self.offsets[u + 1] - self.offsets[u]) as usize
    }

    /// Binary search of `v` in the block of `u`.
    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.is_adjacent_unchecked(u, v))
    }

    #[inline]
    pub fn is_adjacent_unchecked(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors_unchecked(u).binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(low, high)`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n() as VertexId).flat_map(move |u| {
            self.neighbors_unchecked(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }
}
