//! Simple undirected graphs on the dense vertex set `0..n`.
//!
//! Adjacency is stored twice: a bit matrix for O(1) membership queries and
//! sorted neighbour lists for iteration.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Shortest-path distance; `Infinite` when no path exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Distance::Infinite)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) {
        self.set_bit(u, v);
        self.set_bit(v, u);
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.m += 1;
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    /// Rebuilds neighbour lists from a bit matrix. Diagonal bits must be clear.
    fn from_bits(n: usize, bits: Vec<u64>) -> Self {
        let words = n.div_ceil(64);
        let mut adj = vec![Vec::new(); n];
        let mut deg_sum = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            let row = &bits[u * words..(u + 1) * words];
            for (w, &word) in row.iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    list.push(w * 64 + b);
                    word &= word - 1;
                }
            }
            deg_sum += list.len();
        }
        Graph {
            n,
            words,
            bits,
            adj,
            m: deg_sum / 2,
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Δ(G); zero for edgeless and empty graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0) + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Distance::Finite(0));
        }
        let dist = self.bfs_distances(u);
        Ok(dist[v].map_or(Distance::Infinite, Distance::Finite))
    }

    /// Largest pairwise distance; `Infinite` iff the graph is disconnected.
    pub fn diameter(&self) -> Result<Distance> {
        if self.n == 0 {
            return Err(Error::InvalidInput(
                "diameter of the empty graph is undefined".into(),
            ));
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Ok(Distance::Infinite),
                }
            }
        }
        Ok(Distance::Finite(best))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// G²: same vertices, `uv` an edge iff `1 ≤ d(u, v) ≤ 2`.
    pub fn square(&self) -> Graph {
        let w = self.words;
        let mut bits = self.bits.clone();
        for v in 0..self.n {
            for &u in &self.adj[v] {
                for k in 0..w {
                    bits[v * w + k] |= self.bits[u * w + k];
                }
            }
            bits[v * w + v / 64] &= !(1 << (v % 64));
        }
        Graph::from_bits(self.n, bits)
    }

    /// Gᶜ: `uv` an edge iff `u ≠ v` and `uv ∉ E(G)`.
    pub fn complement(&self) -> Graph {
        let w = self.words;
        let mut bits: Vec<u64> = self.bits.iter().map(|x| !x).collect();
        let tail = self.n % 64;
        for v in 0..self.n {
            if tail != 0 {
                bits[v * w + w - 1] &= (1u64 << tail) - 1;
            }
            bits[v * w + v / 64] &= !(1 << (v % 64));
        }
        Graph::from_bits(self.n, bits)
    }

    /// True when both graphs have the same order and every edge of `self`
    /// is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// A copy with one extra vertex (index `n`) adjacent to every vertex.
    pub fn with_dominating_vertex(&self) -> Graph {
        let mut g = Graph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.insert_unchecked(u, v);
        }
        for u in 0..self.n {
            g.insert_unchecked(u, self.n);
        }
        g
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if pos[v] != usize::MAX {
                return Err(Error::InvalidInput(format!("vertex {v} listed twice")));
            }
            pos[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = pos[u];
                if j != usize::MAX && i < j {
                    g.insert_unchecked(i, j);
                }
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, petersen};
    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bool::weighted(0.3), n * (n - 1) / 2).prop_map(
                move |mask| {
                    let mut g = Graph::empty(n);
                    let mut it = mask.into_iter();
                    for u in 0..n {
                        for v in u + 1..n {
                            if it.next().unwrap() {
                                g.add_edge(u, v).unwrap();
                            }
                        }
                    }
                    g
                },
            )
        })
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::complete(4).max_degree(), 3);
        assert_eq!(Graph::empty(5).max_degree(), 0);
        assert_eq!(Graph::empty(0).max_degree(), 0);
        assert_eq!(petersen().max_degree(), 3);
    }

    #[test]
    fn distance_examples() {
        let p5 = path(5).unwrap();
        assert_eq!(p5.distance(0, 4).unwrap(), Distance::Finite(4));
        assert_eq!(p5.distance(2, 2).unwrap(), Distance::Finite(0));
        let e = Graph::empty(2);
        assert_eq!(e.distance(0, 1).unwrap(), Distance::Infinite);
        assert_eq!(Distance::Infinite.to_string(), "inf");
        assert!(matches!(
            p5.distance(0, 5),
            Err(Error::VertexOutOfRange {
                vertex: 5,
                order: 5
            })
        ));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(Graph::complete(6).diameter().unwrap(), Distance::Finite(1));
        assert_eq!(petersen().diameter().unwrap(), Distance::Finite(2));
        let mut g = Graph::empty(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert_eq!(g.diameter().unwrap(), Distance::Infinite);
        assert_eq!(Graph::empty(1).diameter().unwrap(), Distance::Finite(0));
        assert!(Graph::empty(0).diameter().is_err());
    }

    #[test]
    fn square_examples() {
        assert_eq!(path(3).unwrap().square(), Graph::complete(3));
        assert_eq!(petersen().square(), Graph::complete(10));
        assert_eq!(Graph::empty(4).square(), Graph::empty(4));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
        let c5 = cycle(5).unwrap();
        let cc = c5.complement();
        assert_eq!(cc.size(), 5);
        assert!(cc.degrees().iter().all(|&d| d == 2));
        assert!(cc.is_connected());
    }

    #[test]
    fn rejects_malformed_edges() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        g.add_edge(0, 2).unwrap();
        assert_eq!(g.add_edge(2, 0), Err(Error::DuplicateEdge(0, 2)));
        assert!(g.add_edge(0, 3).is_err());
    }

    #[test]
    fn wide_graph_bit_rows() {
        // crosses word boundaries in the bit matrix
        let g = cycle(130).unwrap();
        assert_eq!(g.complement().size(), 130 * 129 / 2 - 130);
        assert_eq!(g.square().max_degree(), 4);
    }

    proptest! {
        #[test]
        fn square_degree_bounded_by_delta_squared(g in arb_graph(14)) {
            let d = g.max_degree();
            prop_assert!(g.square().max_degree() <= d * d);
        }

        #[test]
        fn square_contains_graph(g in arb_graph(14)) {
            prop_assert!(g.is_subgraph_of(&g.square()));
        }

        #[test]
        fn complement_is_involution(g in arb_graph(14)) {
            let c = g.complement();
            let n = g.order();
            prop_assert_eq!(g.size() + c.size(), n * (n - 1) / 2);
            prop_assert_eq!(c.complement(), g);
        }

        #[test]
        fn distance_symmetric_and_triangle(g in arb_graph(10)) {
            let n = g.order();
            for u in 0..n {
                for v in 0..n {
                    let duv = g.distance(u, v).unwrap();
                    prop_assert_eq!(duv, g.distance(v, u).unwrap());
                    for w in 0..n {
                        if let (Distance::Finite(a), Distance::Finite(b)) =
                            (g.distance(u, w).unwrap(), g.distance(w, v).unwrap())
                        {
                            prop_assert!(duv <= Distance::Finite(a + b));
                        }
                    }
                }
            }
        }
    }
}
