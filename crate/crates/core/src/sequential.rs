//! Reference sequential enumerator.
//!
//! Every chordless cycle of length ≥ 4 is grown from exactly one triplet
//! `⟨x, u, y⟩` (x, y neighbours of u, ℓ(u) < ℓ(x) < ℓ(y), x and y not
//! adjacent) by depth-first extension at the last vertex. A candidate `v`
//! must carry a label above ℓ(u) and its neighbours on the path may only be
//! the last vertex (extension) or the last and first vertices (closure).

use crate::bitset::VertexSet;
use crate::cycles::CycleSet;
use crate::graph::CompactGraph;
use crate::labeling::{degree_labeling, Labeling};
use crate::VertexId;

/// `⟨x, u, y⟩`: centre `u` with two neighbours labelled above it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triplet {
    pub x: VertexId,
    pub u: VertexId,
    pub y: VertexId,
}

impl Triplet {
    pub fn as_array(&self) -> [VertexId; 3] {
        [self.x, self.u, self.y]
    }
}

/// Splits all label-ordered wedges into triangles (x, y adjacent) and the
/// initial triplet set.
pub fn find_triplets(g: &CompactGraph, labeling: &Labeling) -> (Vec<Triplet>, Vec<Triplet>) {
    let mut triangles = Vec::new();
    let mut triplets = Vec::new();
    for u in 0..g.n() as VertexId {
        let lu = labeling.label(u);
        let nbrs = g.neighbors_unchecked(u);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                let (x, y) = if labeling.label(a) < labeling.label(b) {
                    (a, b)
                } else {
                    (b, a)
                };
                if labeling.label(x) <= lu {
                    continue;
                }
                let t = Triplet { x, u, y };
                if g.is_adjacent_unchecked(x, y) {
                    triangles.push(t);
                } else {
                    triplets.push(t);
                }
            }
        }
    }
    (triangles, triplets)
}

/// How a candidate vertex relates to the current path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Candidate {
    Extends,
    Closes,
    Rejected,
}

/// Classifies `v` (a neighbour of `last`, not on the path) by its
/// neighbours on the path: exactly `{last}` extends, exactly
/// `{last, first}` closes a cycle, anything else is a chord.
#[inline]
pub(crate) fn classify(
    g: &CompactGraph,
    members: &[u64],
    first: VertexId,
    last: VertexId,
    v: VertexId,
) -> Candidate {
    let mut touches_first = false;
    for &w in g.neighbors_unchecked(v) {
        if w == last || !crate::bitset::contains(members, w) {
            continue;
        }
        if w == first {
            touches_first = true;
        } else {
            return Candidate::Rejected;
        }
    }
    if touches_first {
        Candidate::Closes
    } else {
        Candidate::Extends
    }
}

struct Frame {
    vertex: VertexId,
    next: usize,
}

/// Depth-first expansion of the given triplets, appending closed cycles to
/// `out`. Uses an explicit stack; path depth can reach `n`.
pub fn expand_triplets(
    g: &CompactGraph,
    labeling: &Labeling,
    triplets: &[Triplet],
    out: &mut CycleSet,
) {
    let mut members = VertexSet::new(g.n());
    let mut path: Vec<VertexId> = Vec::with_capacity(g.n());
    let mut stack: Vec<Frame> = Vec::with_capacity(g.n());
    for t in triplets {
        let floor = labeling.label(t.u);
        path.clear();
        path.extend_from_slice(&t.as_array());
        for v in t.as_array() {
            members.insert(v);
        }
        stack.push(Frame { vertex: t.y, next: 0 });

        while let Some(frame) = stack.last_mut() {
            let last = frame.vertex;
            let nbrs = g.neighbors_unchecked(last);
            if frame.next == nbrs.len() {
                stack.pop();
                members.remove(last);
                path.pop();
                continue;
            }
            let v = nbrs[frame.next];
            frame.next += 1;
            if labeling.label(v) <= floor || members.contains(v) {
                continue;
            }
            match classify(g, members.words(), t.x, last, v) {
                Candidate::Rejected => {}
                Candidate::Closes => {
                    if out.is_count_only() {
                        out.record(path.len() + 1);
                    } else {
                        path.push(v);
                        out.push(&path);
                        path.pop();
                    }
                }
                Candidate::Extends => {
                    path.push(v);
                    members.insert(v);
                    stack.push(Frame { vertex: v, next: 0 });
                }
            }
        }
        // The stack unwound y, leaving x and u.
        members.remove(t.x);
        members.remove(t.u);
    }
}

/// Enumerates every chordless cycle of `g` under the given labeling.
pub fn enumerate_sequential_with(
    g: &CompactGraph,
    labeling: &Labeling,
    count_only: bool,
) -> CycleSet {
    let (triangles, triplets) = find_triplets(g, labeling);
    let mut out = CycleSet::new(count_only);
    for t in &triangles {
        out.push(&t.as_array());
    }
    expand_triplets(g, labeling, &triplets, &mut out);
    out
}

/// Enumerates every chordless cycle of `g`, computing the degree labeling
/// unless one is attached to the graph.
pub fn enumerate_sequential(g: &CompactGraph) -> CycleSet {
    let labeling = resolve_labeling(g);
    enumerate_sequential_with(g, &labeling, false)
}

pub(crate) fn resolve_labeling(g: &CompactGraph) -> Labeling {
    if g.is_labeled() {
        Labeling::from_labels(g.labels().to_vec()).expect("attached labels form a permutation")
    } else {
        degree_labeling(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::graph::build_compact;

    fn identity(n: usize) -> Labeling {
        Labeling::from_labels((0..n as u32).collect()).unwrap()
    }

    #[test]
    fn c4_triplets() {
        let g = build_compact(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (tri, t) = find_triplets(&g, &identity(4));
        assert!(tri.is_empty());
        assert_eq!(t, vec![Triplet { x: 1, u: 0, y: 3 }]);
    }

    #[test]
    fn tree_has_no_triplets() {
        let g = build_compact(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        let (tri, t) = find_triplets(&g, &degree_labeling(&g));
        assert!(tri.is_empty() && t.is_empty());
    }

    #[test]
    fn unicyclic_has_one_triplet() {
        let g = build_compact(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        let (_, t) = find_triplets(&g, &degree_labeling(&g));
        assert_eq!(t.len(), 1);
        for labels in [vec![4, 3, 2, 1, 0], vec![2, 0, 4, 3, 1]] {
            let (_, t) = find_triplets(&g, &Labeling::from_labels(labels).unwrap());
            assert_eq!(t.len(), 1);
        }
    }

    #[test]
    fn c4_cycle() {
        let g = build_compact(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let out = enumerate_sequential_with(&g, &identity(4), false);
        assert_eq!(out.sorted(), vec![vec![1, 0, 3, 2]]);
    }

    #[test]
    fn small_table_rows() {
        let k88 = enumerate_sequential(&generate(Family::CompleteBipartite(8, 8)).unwrap());
        assert_eq!((k88.triangle_count(), k88.chordless_count()), (0, 784));
        let c100 = enumerate_sequential(&generate(Family::Cycle(100)).unwrap());
        assert_eq!((c100.triangle_count(), c100.chordless_count()), (0, 1));
        let wheel = enumerate_sequential(&generate(Family::Wheel(100)).unwrap());
        assert_eq!((wheel.triangle_count(), wheel.chordless_count()), (100, 1));
        let grid = enumerate_sequential(&generate(Family::Grid(5, 6)).unwrap());
        assert_eq!((grid.triangle_count(), grid.chordless_count()), (0, 749));
    }

    #[test]
    fn count_only_matches_stored() {
        let g = generate(Family::Grid(4, 5)).unwrap();
        let l = degree_labeling(&g);
        let full = enumerate_sequential_with(&g, &l, false);
        let counted = enumerate_sequential_with(&g, &l, true);
        assert_eq!(full.total(), counted.total());
        assert_eq!(full.chordless_count(), counted.chordless_count());
        assert!(counted.is_count_only());
    }

    #[test]
    fn outputs_are_canonical() {
        let g = generate(Family::Grid(4, 4)).unwrap();
        let l = degree_labeling(&g);
        let out = enumerate_sequential_with(&g, &l, false);
        for c in out.iter() {
            assert_eq!(crate::cycles::canonicalize(c, &l).unwrap().vertices(), c);
            crate::cycles::verify_chordless_cycle(&g, c).unwrap();
        }
    }
}
