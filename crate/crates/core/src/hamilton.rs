//! Hamilton cycles and paths under Pósa's degree condition, built through
//! the Bondy–Chvátal closure and then unwound edge by edge.

use std::collections::HashMap;

use crate::error::{Error, Precondition, Result};
use crate::graph::Graph;

/// An ordering of vertices, read as a hamilton path or cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSequence(Vec<usize>);

impl VertexSequence {
    pub fn new(order: Vec<usize>) -> Self {
        VertexSequence(order)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// A permutation of the vertices with consecutive entries adjacent.
    pub fn is_hamilton_path(&self, g: &Graph) -> bool {
        is_permutation(&self.0, g.order()) && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// A hamilton path whose ends are also adjacent (needs n ≥ 3).
    pub fn is_hamilton_cycle(&self, g: &Graph) -> bool {
        self.0.len() >= 3
            && self.is_hamilton_path(g)
            && g.has_edge(self.0[0], self.0[self.0.len() - 1])
    }
}

fn is_permutation(seq: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    seq.len() == n
        && seq
            .iter()
            .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

/// Number of vertices of degree at most `k`, for every `k < n`.
fn low_degree_counts(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut counts = vec![0usize; n.max(1)];
    for d in g.degrees() {
        counts[d] += 1;
    }
    for k in 1..counts.len() {
        counts[k] += counts[k - 1];
    }
    counts
}

/// First `k` in `1 ≤ k ≤ (n−1)/2` with `|{v : d(v) ≤ k}| ≥ k`.
fn posa_cycle_failure(g: &Graph) -> Result<Option<usize>> {
    let n = g.order();
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "the cycle condition needs n ≥ 3, got {n}"
        )));
    }
    let counts = low_degree_counts(g);
    Ok((1..=(n - 1) / 2).find(|&k| counts[k] >= k))
}

/// First `k` with `2k ≤ n − 2` and `|{v : d(v) ≤ k}| > k`.
fn posa_path_failure(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let counts = low_degree_counts(g);
    (0..=(n - 2) / 2).find(|&k| counts[k] > k)
}

/// Pósa's condition for a hamilton cycle.
pub fn posa_cycle_condition(g: &Graph) -> Result<bool> {
    Ok(posa_cycle_failure(g)?.is_none())
}

/// The path variant: `|{v : d(v) ≤ k}| ≤ k` whenever `0 ≤ k ≤ (n−2)/2`.
pub fn posa_path_condition(g: &Graph) -> bool {
    posa_path_failure(g).is_none()
}

/// Closure edges in the order they were added.
fn closure_sequence(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let n = g.order();
    let mut closed = g.clone();
    let mut degree = g.degrees();
    let mut added = Vec::new();
    loop {
        let before = added.len();
        for u in 0..n {
            for v in u + 1..n {
                if !closed.has_edge(u, v) && degree[u] + degree[v] >= n {
                    closed.add_edge(u, v)?;
                    degree[u] += 1;
                    degree[v] += 1;
                    added.push((u, v));
                }
            }
        }
        if added.len() == before {
            break;
        }
    }
    if closed.size() != n * (n - 1) / 2 {
        return Err(Error::Internal(format!(
            "closure stopped at {} of {} edges",
            closed.size(),
            n * (n - 1) / 2
        )));
    }
    Ok(added)
}

/// Rotates and orients a cycle to start at vertex 0 with its lower-indexed
/// neighbour second.
fn normalize_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let n = cycle.len();
    if n == 0 {
        return cycle;
    }
    let start = cycle.iter().position(|&v| v == 0).unwrap_or(0);
    cycle.rotate_left(start);
    if n > 2 && cycle[n - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

/// A hamilton cycle of `g`, which must satisfy Pósa's condition.
pub fn hamilton_cycle(g: &Graph) -> Result<VertexSequence> {
    if let Some(k) = posa_cycle_failure(g)? {
        return Err(Precondition::PosaCycle { k }.into());
    }
    let n = g.order();
    let added = closure_sequence(g)?;
    // added edge i is still present while a later edge k > i is removed
    let rank: HashMap<(usize, usize), usize> =
        added.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut cycle: Vec<usize> = (0..n).collect();
    for (k, &(u, v)) in added.iter().enumerate().rev() {
        let present = |a: usize, b: usize| {
            g.has_edge(a, b) || rank.get(&(a.min(b), a.max(b))).is_some_and(|&i| i < k)
        };
        cycle = reroute(present, cycle, u, v)?;
    }
    let cycle = VertexSequence(normalize_cycle(cycle));
    if !cycle.is_hamilton_cycle(g) {
        return Err(Error::Internal("unwound cycle failed verification".into()));
    }
    Ok(cycle)
}

/// If `cycle` uses the (now removed) edge `uv`, replaces it using the fact
/// that `d(u) + d(v) ≥ n` once `uv` is gone.
fn reroute(
    adjacent: impl Fn(usize, usize) -> bool,
    cycle: Vec<usize>,
    u: usize,
    v: usize,
) -> Result<Vec<usize>> {
    let n = cycle.len();
    let iu = cycle
        .iter()
        .position(|&x| x == u)
        .expect("u is on the cycle");
    let (prev, next) = (cycle[(iu + n - 1) % n], cycle[(iu + 1) % n]);
    if prev != v && next != v {
        return Ok(cycle);
    }
    // the hamilton path u = p_0, …, p_{n−1} = v
    let path: Vec<usize> = if next == v {
        (0..n).map(|k| cycle[(iu + n - k) % n]).collect()
    } else {
        (0..n).map(|k| cycle[(iu + k) % n]).collect()
    };
    debug_assert_eq!(path[n - 1], v);
    let i = (1..n.saturating_sub(2))
        .find(|&i| adjacent(path[i], v) && adjacent(path[i + 1], u))
        .ok_or_else(|| Error::Internal(format!("no crossing pair while removing {{{u}, {v}}}")))?;
    // u, p_{i+1}, …, p_{n−1} = v, p_i, p_{i−1}, …, p_1
    let mut rerouted = Vec::with_capacity(n);
    rerouted.push(u);
    rerouted.extend_from_slice(&path[i + 1..]);
    rerouted.extend(path[1..=i].iter().rev());
    Ok(rerouted)
}

/// A hamilton path of `g`, which must satisfy the path form of Pósa's
/// condition. A dominating vertex is added, a hamilton cycle found, and the
/// extra vertex dropped.
pub fn hamilton_path(g: &Graph) -> Result<VertexSequence> {
    let n = g.order();
    match n {
        0 => {
            return Err(Error::InvalidInput(
                "empty graph has no hamilton path".into(),
            ))
        }
        1 => return Ok(VertexSequence(vec![0])),
        _ => {}
    }
    if let Some(k) = posa_path_failure(g) {
        return Err(Precondition::PosaPath { k }.into());
    }
    let extended = g.with_dominating_vertex();
    let cycle = hamilton_cycle(&extended).map_err(|e| match e {
        Error::Precondition(_) => Error::Internal(
            "path condition held but the extended graph failed the cycle condition".into(),
        ),
        other => other,
    })?;
    let mut order = cycle.into_vec();
    let at = order
        .iter()
        .position(|&x| x == n)
        .expect("dominating vertex present");
    order.rotate_left(at);
    order.remove(0);
    let path = VertexSequence(order);
    if !path.is_hamilton_path(g) {
        return Err(Error::Internal("hamilton path failed verification".into()));
    }
    Ok(path)
}
