//! Food webs and their niche-overlap (competition) graphs.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{build_compact, CompactGraph};
use crate::io::parse_edge_list;
use crate::VertexId;

/// Directed predator → prey arcs over `n` species.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedEdgeList {
    pub n: usize,
    pub arcs: Vec<(VertexId, VertexId)>,
}

impl DirectedEdgeList {
    pub fn new(n: usize, arcs: Vec<(VertexId, VertexId)>) -> Result<Self> {
        for &(a, b) in &arcs {
            for v in [a, b] {
                if v as usize >= n {
                    return Err(Error::InvalidVertex { vertex: v as u64, n });
                }
            }
        }
        Ok(Self { n, arcs })
    }

    /// Reads the edge-list format with lines interpreted as `predator prey`.
    /// Self-arcs (cannibalism) are accepted here and ignored by the transform.
    pub fn load<R: BufRead>(reader: R) -> Result<Self> {
        let text = parse_edge_list(reader)?;
        Ok(Self {
            n: text.n,
            arcs: text.pairs.into_iter().map(|(u, v, _)| (u, v)).collect(),
        })
    }
}

/// Two species are joined iff they share at least one prey.
pub fn niche_overlap(fw: &DirectedEdgeList) -> Result<CompactGraph> {
    let mut predators_of: Vec<Vec<VertexId>> = vec![Vec::new(); fw.n];
    for &(predator, prey) in &fw.arcs {
        for v in [predator, prey] {
            if v as usize >= fw.n {
                return Err(Error::InvalidVertex {
                    vertex: v as u64,
                    n: fw.n,
                });
            }
        }
        if predator != prey {
            predators_of[prey as usize].push(predator);
        }
    }
    let mut edges = Vec::new();
    for preds in &mut predators_of {
        preds.sort_unstable();
        preds.dedup();
        for (i, &a) in preds.iter().enumerate() {
            edges.extend(preds[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    build_compact(fw.n, edges)
}
