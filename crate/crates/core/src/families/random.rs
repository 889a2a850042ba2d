//! Seeded random graphs for sweeps and fuzzing. All draws come from
//! `ChaCha8Rng::seed_from_u64(seed)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// G(n, p): each pair `u < v` is an edge with probability `p`, pairs scanned
/// in lexicographic order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// A graph with maximum degree at most `max_degree`: candidate pairs are
/// shuffled and `attempts` of them kept greedily while both ends have room.
pub fn bounded_degree(n: usize, max_degree: usize, attempts: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut g = Graph::empty(n);
    for (u, v) in pairs.into_iter().take(attempts) {
        if g.degree(u) < max_degree && g.degree(v) < max_degree {
            g.add_edge(u, v).expect("fresh pair");
        }
    }
    g
}

/// A uniformly random subgraph of `g` on the same vertex set: each edge is
/// kept with probability `p`.
pub fn random_subgraph(g: &Graph, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = Graph::empty(g.order());
    for (u, v) in g.edges() {
        if rng.gen_bool(p.clamp(0.0, 1.0)) {
            h.add_edge(u, v).expect("edge of g");
        }
    }
    h
}
