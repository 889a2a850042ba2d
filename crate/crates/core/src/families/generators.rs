//! Named graph families with canonical vertex numbering.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Seed used by randomized generators when the caller does not give one.
pub const DEFAULT_SEED: u64 = 0;

/// A named family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Star on `n` vertices: centre 0 and leaves `1..n`.
    Star(usize),
    RandomTree {
        n: usize,
        seed: u64,
    },
    Petersen,
    HoffmanSingleton,
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::Star(n) => star(n),
            Family::RandomTree { n, seed } => random_tree(n, seed),
            Family::Petersen => Ok(petersen()),
            Family::HoffmanSingleton => Ok(hoffman_singleton()),
        }
    }
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidInput(msg()))
    }
}

/// P_n: `i ~ i+1`.
pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, || "path needs n ≥ 1".into())?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// C_n: `i ~ i+1 mod n`.
pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, || format!("cycle needs n ≥ 3, got {n}"))?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, || "complete graph needs n ≥ 1".into())?;
    Ok(Graph::complete(n))
}

pub fn star(n: usize) -> Result<Graph> {
    need(n >= 1, || "star needs n ≥ 1".into())?;
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

/// Outer cycle `0..5`, spokes `i ~ i+5`, inner pentagram `5+i ~ 5+(i+2 mod 5)`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid construction")
}

/// Five pentagons P_h (vertices `5h + j`, `j ~ j±1`) and five pentagrams
/// Q_i (vertices `25 + 5i + j`, `j ~ j±2`); vertex j of P_h is joined to
/// vertex `h·i + j mod 5` of Q_i.
pub fn hoffman_singleton() -> Graph {
    let mut g = Graph::empty(50);
    for h in 0..5 {
        for j in 0..5 {
            g.add_edge(5 * h + j, 5 * h + (j + 1) % 5)
                .expect("pentagon");
            g.add_edge(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5)
                .expect("pentagram");
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                g.add_edge(5 * h + j, 25 + 5 * i + (h * i + j) % 5)
                    .expect("cross edge");
            }
        }
    }
    g
}

/// Uniform labeled tree on `n` vertices.
///
/// The Prüfer sequence is `n − 2` draws of `gen_range(0..n)` from
/// `ChaCha8Rng::seed_from_u64(seed)`; it is decoded by repeatedly joining the
/// smallest current leaf to the next sequence entry.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    need(n >= 1, || "tree needs n ≥ 1".into())?;
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &prufer)
}

pub(crate) fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    let mut remaining = vec![1usize; n];
    for &x in seq {
        remaining[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut g = Graph::empty(n);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        g.add_edge(leaf, x)?;
        remaining[x] -= 1;
        if remaining[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    g.add_edge(a, b)?;
    Ok(g)
}
