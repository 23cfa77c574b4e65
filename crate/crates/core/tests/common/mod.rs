#![allow(dead_code)]

use chordless::generate::{generate, Family};
use chordless::graph::{build_compact, CompactGraph};
use chordless::VertexId;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x000c_401d_1e55;

/// G(n, p) over vertices 0..n.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> CompactGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a as VertexId, b as VertexId));
            }
        }
    }
    build_compact(n, edges).unwrap()
}

/// 200 seeded random graphs, n in [4, 20], p in {0.2, 0.35, 0.5}.
pub fn random_corpus() -> Vec<(String, CompactGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let probabilities = [0.2, 0.35, 0.5];
    (0..200)
        .map(|i| {
            let n = rng.random_range(4..=20);
            let p = probabilities[i % probabilities.len()];
            (format!("random#{i}(n={n},p={p})"), random_graph(n, p, &mut rng))
        })
        .collect()
}

/// Generator families at small parameters (n <= 30 so the oracle applies).
pub fn family_corpus() -> Vec<(String, CompactGraph)> {
    let mut families = Vec::new();
    for k in 3..=12 {
        families.push(Family::Cycle(k));
        families.push(Family::Wheel(k));
    }
    for a in 1..=6 {
        for b in a..=6 {
            families.push(Family::CompleteBipartite(a, b));
        }
    }
    for r in 1..=5 {
        for c in r..=6 {
            families.push(Family::Grid(r, c));
        }
    }
    families.push(Family::CompleteBipartite(8, 8));
    families
        .into_iter()
        .map(|f| (f.to_string(), generate(f).unwrap()))
        .collect()
}

/// Everything the corpus-wide properties run over.
pub fn corpus() -> Vec<(String, CompactGraph)> {
    let mut all = family_corpus();
    // Larger generators (beyond the oracle bound) for engine-only checks.
    for f in [Family::Grid(4, 10), Family::Grid(6, 6), Family::Wheel(40), Family::Cycle(60)] {
        all.push((f.to_string(), generate(f).unwrap()));
    }
    all.extend(random_corpus());
    all
}

/// Plain O(n^2) replay of the deletion order: each vertex must have minimum
/// degree among the vertices not yet deleted.
pub fn replay_labeling(g: &CompactGraph, labels: &[u32]) -> Result<(), String> {
    let n = g.n();
    let mut order = vec![0 as VertexId; n];
    for (v, &l) in labels.iter().enumerate() {
        order[l as usize] = v as VertexId;
    }
    let mut alive = vec![true; n];
    for (step, &u) in order.iter().enumerate() {
        let live_degree = |v: VertexId| {
            g.neighbors(v)
                .unwrap()
                .iter()
                .filter(|&&w| alive[w as usize])
                .count()
        };
        let min = (0..n as VertexId)
            .filter(|&v| alive[v as usize])
            .map(live_degree)
            .min()
            .unwrap();
        let du = live_degree(u);
        if du != min {
            return Err(format!("step {step}: vertex {u} has degree {du}, minimum is {min}"));
        }
        alive[u as usize] = false;
    }
    Ok(())
}
