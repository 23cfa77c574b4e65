//! Cycle representations shared by every engine: canonical ordering,
//! order recovery from a vertex bitmap, and the result set.

use std::collections::HashSet;

use crate::bitset;
use crate::error::{Error, Result};
use crate::graph::CompactGraph;
use crate::labeling::Labeling;
use crate::VertexId;

/// A cycle written so that its second vertex has the smallest label and the
/// first vertex has a smaller label than the third.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCycle(Vec<VertexId>);

impl CanonicalCycle {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }
}

fn check_cycle_shape(seq: &[VertexId]) -> Result<()> {
    if seq.len() < 3 {
        return Err(Error::NotACycle(format!("{} vertices", seq.len())));
    }
    let mut seen = HashSet::with_capacity(seq.len());
    if let Some(v) = seq.iter().find(|&&v| !seen.insert(v)) {
        return Err(Error::NotACycle(format!("vertex {v} repeats")));
    }
    Ok(())
}

/// Rotates/reflects `seq` into its unique canonical form under `labeling`.
///
/// Only the sequence shape (length ≥ 3, distinct ids in range) is checked;
/// use [`verify_chordless_cycle`] for adjacency.
pub fn canonicalize(seq: &[VertexId], labeling: &Labeling) -> Result<CanonicalCycle> {
    check_cycle_shape(seq)?;
    if let Some(&v) = seq.iter().find(|&&v| v as usize >= labeling.len()) {
        return Err(Error::NotACycle(format!("vertex {v} has no label")));
    }
    let k = seq.len();
    let pivot = (0..k).min_by_key(|&i| labeling.label(seq[i])).unwrap();
    let prev = seq[(pivot + k - 1) % k];
    let next = seq[(pivot + 1) % k];
    let out = if labeling.label(prev) < labeling.label(next) {
        // prev, pivot, next, ... walking forward
        (0..k).map(|j| seq[(pivot + k - 1 + j) % k]).collect()
    } else {
        // next, pivot, prev, ... walking backward
        (0..k).map(|j| seq[(pivot + 1 + k - j) % k]).collect()
    };
    Ok(CanonicalCycle(out))
}

/// Label-free normal form: smallest id first, then towards its smaller
/// neighbour on the cycle.
pub fn normalize_by_id(seq: &[VertexId]) -> Result<Vec<VertexId>> {
    check_cycle_shape(seq)?;
    let k = seq.len();
    let pivot = (0..k).min_by_key(|&i| seq[i]).unwrap();
    let prev = seq[(pivot + k - 1) % k];
    let next = seq[(pivot + 1) % k];
    Ok(if next < prev {
        (0..k).map(|j| seq[(pivot + j) % k]).collect()
    } else {
        (0..k).map(|j| seq[(pivot + k - j) % k]).collect()
    })
}

/// Checks that `seq` is a chordless cycle of `g`: consecutive vertices
/// (including last→first) adjacent and the induced subgraph has exactly
/// `seq.len()` edges.
pub fn verify_chordless_cycle(g: &CompactGraph, seq: &[VertexId]) -> Result<()> {
    check_cycle_shape(seq)?;
    let k = seq.len();
    for i in 0..k {
        let (a, b) = (seq[i], seq[(i + 1) % k]);
        if !g.is_adjacent(a, b)? {
            return Err(Error::NotACycle(format!("{a} and {b} are not adjacent")));
        }
    }
    let members: HashSet<VertexId> = seq.iter().copied().collect();
    let induced: usize = seq
        .iter()
        .map(|&v| {
            g.neighbors_unchecked(v)
                .iter()
                .filter(|w| members.contains(w))
                .count()
        })
        .sum::<usize>()
        / 2;
    if induced != k {
        return Err(Error::NotACycle(format!(
            "{k} vertices induce {induced} edges"
        )));
    }
    Ok(())
}

fn member_neighbors<'a>(
    g: &'a CompactGraph,
    members: &'a [u64],
    v: VertexId,
) -> impl Iterator<Item = VertexId> + 'a {
    g.neighbors_unchecked(v)
        .iter()
        .copied()
        .filter(move |&w| bitset::contains(members, w))
}

/// Recovers the vertex order of an induced path or cycle stored as a bitmap.
///
/// With `first != last` and the set inducing a path, returns the path from
/// `first` to `last`. If the set induces a cycle through the edge
/// `(last, first)`, returns the cycle starting at `first` and ending at
/// `last`. A single-vertex set needs `first == last`.
pub fn reconstruct_order(
    g: &CompactGraph,
    members: &[u64],
    first: VertexId,
    last: VertexId,
) -> Result<Vec<VertexId>> {
    let n = g.n();
    for v in [first, last] {
        if v as usize >= n {
            return Err(Error::InvalidVertex { vertex: v as u64, n });
        }
        if !bitset::contains(members, v) {
            return Err(Error::NotInduced(format!("endpoint {v} not in set")));
        }
    }
    let size = bitset::popcount(members);
    if size == 1 {
        return if first == last {
            Ok(vec![first])
        } else {
            Err(Error::NotInduced("single vertex with distinct endpoints".into()))
        };
    }
    if first == last {
        return Err(Error::NotInduced("endpoints coincide".into()));
    }

    let mut leaves = 0;
    let mut cycle = true;
    for v in bitset::ones(members) {
        if v as usize >= n {
            return Err(Error::InvalidVertex { vertex: v as u64, n });
        }
        match member_neighbors(g, members, v).count() {
            1 => {
                leaves += 1;
                cycle = false;
                if v != first && v != last {
                    return Err(Error::NotInduced(format!("{v} is an unexpected endpoint")));
                }
            }
            2 => {}
            d => return Err(Error::NotInduced(format!("vertex {v} has induced degree {d}"))),
        }
    }
    if cycle && (size < 3 || !g.is_adjacent_unchecked(first, last)) {
        return Err(Error::NotInduced("cycle does not close through the endpoints".into()));
    }
    if !cycle && leaves != 2 {
        return Err(Error::NotInduced("not a path".into()));
    }

    let mut order = Vec::with_capacity(size);
    order.push(first);
    let mut prev = if cycle { last } else { first };
    let mut cur = first;
    while cur != last {
        let next = member_neighbors(g, members, cur)
            .find(|&w| w != prev)
            .ok_or_else(|| Error::NotInduced("walk ended early".into()))?;
        prev = cur;
        cur = next;
        order.push(cur);
        if order.len() > size {
            break;
        }
    }
    if order.len() != size {
        // Degree checks passed but the set is disconnected (a path plus
        // disjoint cycles, or several cycles).
        return Err(Error::NotInduced("vertex set is disconnected".into()));
    }
    Ok(order)
}

/// Recovers an induced cycle with no known endpoints, starting at its
/// smallest vertex and heading to the smaller neighbour.
pub fn reconstruct_cycle(g: &CompactGraph, members: &[u64]) -> Result<Vec<VertexId>> {
    let start = bitset::ones(members)
        .next()
        .ok_or_else(|| Error::NotInduced("empty set".into()))?;
    if start as usize >= g.n() {
        return Err(Error::InvalidVertex {
            vertex: start as u64,
            n: g.n(),
        });
    }
    let mut nbrs = member_neighbors(g, members, start);
    let (Some(a), Some(b)) = (nbrs.next(), nbrs.next()) else {
        return Err(Error::NotInduced(format!("vertex {start} is not on a cycle")));
    };
    // Ending at the larger neighbour makes the walk head for the smaller.
    reconstruct_order(g, members, start, a.max(b)).and_then(|order| {
        if g.is_adjacent_unchecked(*order.last().unwrap(), start) && order.len() >= 3 {
            Ok(order)
        } else {
            Err(Error::NotInduced("not a cycle".into()))
        }
    })
}

/// Flat storage for many short vertex sequences.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CycleBuf {
    offsets: Vec<usize>,
    vertices: Vec<VertexId>,
}

impl CycleBuf {
    pub fn new() -> Self {
        Self {
            offsets: vec![0],
            vertices: Vec::new(),
        }
    }

    pub fn push(&mut self, cycle: &[VertexId]) {
        self.vertices.extend_from_slice(cycle);
        self.offsets.push(self.vertices.len());
    }

    pub fn len(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> &[VertexId] {
        &self.vertices[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[VertexId]> + '_ {
        self.offsets.windows(2).map(|w| &self.vertices[w[0]..w[1]])
    }
}

/// Enumeration result: triangle and longer-cycle counts, plus the cycles
/// themselves unless the run was count-only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSet {
    triangles: u64,
    longer: u64,
    cycles: Option<CycleBuf>,
}

impl CycleSet {
    pub fn new(count_only: bool) -> Self {
        Self {
            triangles: 0,
            longer: 0,
            cycles: if count_only { None } else { Some(CycleBuf::new()) },
        }
    }

    pub fn is_count_only(&self) -> bool {
        self.cycles.is_none()
    }

    pub fn push(&mut self, cycle: &[VertexId]) {
        self.record(cycle.len());
        if let Some(buf) = &mut self.cycles {
            buf.push(cycle);
        }
    }

    /// Counts a cycle of length `len` without storing it.
    #[inline]
    pub fn record(&mut self, len: usize) {
        if len == 3 {
            self.triangles += 1;
        } else {
            self.longer += 1;
        }
    }

    pub(crate) fn add_counts(&mut self, triangles: u64, longer: u64) {
        self.triangles += triangles;
        self.longer += longer;
    }

    /// C₃: chordless cycles of length three.
    pub fn triangle_count(&self) -> u64 {
        self.triangles
    }

    /// Chordless cycles longer than three.
    pub fn chordless_count(&self) -> u64 {
        self.longer
    }

    pub fn total(&self) -> u64 {
        self.triangles + self.longer
    }

    /// Stored cycles; empty in count-only mode.
    pub fn iter(&self) -> impl Iterator<Item = &[VertexId]> + '_ {
        self.cycles.iter().flat_map(|b| b.iter())
    }

    pub fn cycles(&self) -> Option<&CycleBuf> {
        self.cycles.as_ref()
    }

    /// Re-expresses every stored cycle in canonical form under `labeling`.
    pub fn canonicalized(&self, labeling: &Labeling) -> Result<CycleSet> {
        let mut out = CycleSet::new(self.is_count_only());
        out.triangles = self.triangles;
        out.longer = self.longer;
        if let Some(buf) = &self.cycles {
            let mut canon = CycleBuf::new();
            for c in buf.iter() {
                canon.push(canonicalize(c, labeling)?.vertices());
            }
            out.cycles = Some(canon);
        }
        Ok(out)
    }

    /// Stored cycles sorted lexicographically.
    pub fn sorted(&self) -> Vec<Vec<VertexId>> {
        let mut v: Vec<Vec<VertexId>> = self.iter().map(<[_]>::to_vec).collect();
        v.sort_unstable();
        v
    }

    /// True when two stored sequences are equal.
    pub fn has_duplicates(&self) -> bool {
        let mut seen = HashSet::new();
        self.iter().any(|c| !seen.insert(c))
    }
}
