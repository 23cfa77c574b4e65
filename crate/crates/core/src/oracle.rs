//! Brute-force chordless cycle enumeration for validating the engines.
//!
//! Cycles are rooted at their smallest vertex and read towards the smaller
//! of the root's two cycle neighbours, so each cycle is produced once
//! without any labeling. Paths that already carry a chord are abandoned (a
//! chord between path vertices survives into every cycle through the path)
//! and each emitted cycle is re-checked by counting induced edges on a
//! dense adjacency matrix.

use crate::cycles::{CycleBuf, CycleSet};
use crate::error::{Error, Result};
use crate::graph::CompactGraph;
use crate::VertexId;

pub const DEFAULT_BOUND: usize = 30;

pub fn brute_force_chordless(g: &CompactGraph) -> Result<CycleSet> {
    brute_force_chordless_bounded(g, DEFAULT_BOUND)
}

/// Returns cycles in id-normal form (smallest id first, then its smaller
/// neighbour). Use [`CycleSet::canonicalized`] to compare with an engine.
pub fn brute_force_chordless_bounded(g: &CompactGraph, bound: usize) -> Result<CycleSet> {
    let n = g.n();
    if n > bound {
        return Err(Error::InputTooLarge { n, bound });
    }
    let mut adj = vec![vec![false; n]; n];
    for (a, b) in g.edges() {
        adj[a as usize][b as usize] = true;
        adj[b as usize][a as usize] = true;
    }
    let mut found = CycleBuf::new();
    let mut path = Vec::with_capacity(n);
    let mut on_path = vec![false; n];
    for root in 0..n {
        path.push(root);
        on_path[root] = true;
        extend(&adj, root, &mut path, &mut on_path, &mut found);
        on_path[root] = false;
        path.pop();
    }

    let mut out = CycleSet::new(false);
    for cycle in found.iter() {
        let members: Vec<usize> = cycle.iter().map(|&v| v as usize).collect();
        let induced = members
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| members[i + 1..].iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| adj[a][b])
            .count();
        if induced == cycle.len() {
            out.push(cycle);
        }
    }
    Ok(out)
}

fn extend(
    adj: &[Vec<bool>],
    root: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut CycleBuf,
) {
    let last = *path.last().unwrap();
    for v in root + 1..adj.len() {
        if !adj[last][v] || on_path[v] {
            continue;
        }
        // Any edge from v to the path other than to `last` (or to the root,
        // which closes) is a chord.
        let interior = if path.len() > 2 {
            &path[1..path.len() - 1]
        } else {
            &[][..]
        };
        if interior.iter().any(|&w| adj[v][w]) {
            continue;
        }
        if path.len() >= 2 && adj[v][root] {
            if path[1] < v {
                let mut cycle: Vec<VertexId> = path.iter().map(|&w| w as VertexId).collect();
                cycle.push(v as VertexId);
                found.push(&cycle);
            }
            continue;
        }
        path.push(v);
        on_path[v] = true;
        extend(adj, root, path, on_path, found);
        on_path[v] = false;
        path.pop();
    }
}
