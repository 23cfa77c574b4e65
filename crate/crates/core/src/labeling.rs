//! Degree labeling: repeatedly delete a minimum-degree vertex; the vertex
//! removed at step `i` receives label `i`. Ties go to the smallest vertex id.

use std::collections::BTreeSet;

use crate::graph::CompactGraph;
use crate::VertexId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<u32>,
    order: Vec<VertexId>,
}

impl Labeling {
    /// Builds a labeling from explicit labels; `None` unless they form a
    /// permutation of `0..n`.
    pub fn from_labels(labels: Vec<u32>) -> Option<Self> {
        let n = labels.len();
        let mut order = vec![VertexId::MAX; n];
        for (v, &l) in labels.iter().enumerate() {
            let slot = order.get_mut(l as usize)?;
            if *slot != VertexId::MAX {
                return None;
            }
            *slot = v as VertexId;
        }
        Some(Self { labels, order })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    #[inline]
    pub fn label(&self, v: VertexId) -> u32 {
        self.labels[v as usize]
    }

    /// Vertices in deletion order (`order()[i]` carries label `i`).
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Computes the degree labeling with degree buckets.
///
/// Each bucket is an ordered set so the smallest id of the minimum bucket is
/// found directly. Deleting a vertex lowers each live neighbour by one, so
/// the minimum degree drops by at most one per step.
pub fn degree_labeling(g: &CompactGraph) -> Labeling {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n as VertexId).map(|v| g.degree(v)).collect();
    let mut buckets: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); g.max_degree() + 1];
    for (v, &d) in degree.iter().enumerate() {
        buckets[d].insert(v as VertexId);
    }
    let mut removed = vec![false; n];
    let mut labels = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    let mut min = 0usize;
    for step in 0..n {
        while buckets[min].is_empty() {
            min += 1;
        }
        let u = buckets[min].pop_first().unwrap();
        removed[u as usize] = true;
        labels[u as usize] = step as u32;
        order.push(u);
        for &w in g.neighbors_unchecked(u) {
            let w_idx = w as usize;
            if removed[w_idx] {
                continue;
            }
            let d = degree[w_idx];
            buckets[d].remove(&w);
            buckets[d - 1].insert(w);
            degree[w_idx] = d - 1;
        }
        min = min.saturating_sub(1);
    }
    Labeling { labels, order }
}

/// Computes the labeling and stores it in the graph's label vector.
pub fn label_in_place(g: &mut CompactGraph) -> Labeling {
    let labeling = degree_labeling(g);
    g.attach_labels(&labeling);
    labeling
}
