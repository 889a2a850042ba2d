//! Labelings, (G,H) instances and their verifiers.
//!
//! An [`Instance`] `(G, H)` with `H ⊆ G` asks for labels differing by at
//! least 2 across edges of `H` and by at least 1 across the remaining edges
//! of `G`. An L(2,1)-labeling of `F` is exactly a labeling of `(F², F)`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total vertex labeling with nonnegative integer labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<u32>,
}

impl Labeling {
    pub fn new(labels: Vec<u32>) -> Self {
        Labeling { labels }
    }

    /// Accepts arbitrary integers and shifts them so the minimum is 0.
    pub fn normalized_from(labels: &[i64]) -> Result<Self> {
        let Some(&min) = labels.iter().min() else {
            return Ok(Labeling::new(Vec::new()));
        };
        labels
            .iter()
            .map(|&l| u32::try_from(l - min))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Labeling::new)
            .map_err(|_| Error::InvalidInput("label range exceeds u32".into()))
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn span(&self) -> Result<u32> {
        span_of(self)
    }

    /// Copy with the minimum label moved to 0.
    pub fn normalized(&self) -> Labeling {
        let min = self.labels.iter().copied().min().unwrap_or(0);
        Labeling::new(self.labels.iter().map(|l| l - min).collect())
    }

    pub fn shifted(&self, by: u32) -> Labeling {
        Labeling::new(self.labels.iter().map(|l| l + by).collect())
    }

    /// Number of vertices carrying each label in `0..count`.
    pub fn class_sizes(&self, count: usize) -> Vec<usize> {
        let mut sizes = vec![0; count];
        for &l in &self.labels {
            if let Some(s) = sizes.get_mut(l as usize) {
                *s += 1;
            }
        }
        sizes
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.labels.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// Largest minus smallest label.
pub fn span_of(f: &Labeling) -> Result<u32> {
    let min = f.labels.iter().min();
    let max = f.labels.iter().max();
    match (min, max) {
        (Some(lo), Some(hi)) => Ok(hi - lo),
        _ => Err(Error::InvalidInput("span of an empty labeling".into())),
    }
}

/// A pair `(G, H)` on a common vertex set with `E(H) ⊆ E(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    g: Graph,
    h: Graph,
}

impl Instance {
    pub fn new(g: Graph, h: Graph) -> Result<Self> {
        if g.order() != h.order() {
            return Err(Error::InvalidInput(format!(
                "G has {} vertices but H has {}",
                g.order(),
                h.order()
            )));
        }
        if !h.is_subgraph_of(&g) {
            return Err(Error::InvalidInput("H is not a subgraph of G".into()));
        }
        Ok(Instance { g, h })
    }

    pub fn g(&self) -> &Graph {
        &self.g
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    /// Required separation of `u` and `v`: 2 on H-edges, 1 on other G-edges.
    pub fn weight(&self, u: usize, v: usize) -> Option<u32> {
        if self.h.has_edge(u, v) {
            Some(2)
        } else if self.g.has_edge(u, v) {
            Some(1)
        } else {
            None
        }
    }

    /// G-edges with their weights, in lexicographic order.
    pub fn weighted_edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.g
            .edges()
            .map(|(u, v)| (u, v, if self.h.has_edge(u, v) { 2 } else { 1 }))
    }
}

/// `(F², F)`.
pub fn l21_as_instance(f: &Graph) -> Instance {
    Instance {
        g: f.square(),
        h: f.clone(),
    }
}

/// Why a pair of vertices is constrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// At distance 1 in the labeled graph.
    Adjacent,
    /// At distance 2 in the labeled graph.
    DistanceTwo,
    /// A G-edge of an instance carrying the given weight.
    Weight(u32),
}

impl Relation {
    pub fn required_gap(self) -> u32 {
        match self {
            Relation::Adjacent => 2,
            Relation::DistanceTwo => 1,
            Relation::Weight(w) => w,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub relation: Relation,
    pub gap: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// Every violating pair, `u < v`, in lexicographic order.
    Invalid(Vec<Violation>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Verdict::Valid => &[],
            Verdict::Invalid(v) => v,
        }
    }

    fn from_violations(v: Vec<Violation>) -> Self {
        if v.is_empty() {
            Verdict::Valid
        } else {
            Verdict::Invalid(v)
        }
    }
}

fn check_total(n: usize, f: &Labeling) -> Result<()> {
    if f.len() == n {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "labeling covers {} values for {} vertices",
            f.len(),
            n
        )))
    }
}

fn gap(f: &Labeling, u: usize, v: usize) -> u32 {
    f.label(u).abs_diff(f.label(v))
}

/// Checks the distance-one (gap ≥ 2) and distance-two (gap ≥ 1) conditions.
pub fn verify_l21(g: &Graph, f: &Labeling) -> Result<Verdict> {
    check_total(g.order(), f)?;
    let sq = g.square();
    let violations = sq
        .edges()
        .filter_map(|(u, v)| {
            let relation = if g.has_edge(u, v) {
                Relation::Adjacent
            } else {
                Relation::DistanceTwo
            };
            let gap = gap(f, u, v);
            (gap < relation.required_gap()).then_some(Violation {
                u,
                v,
                relation,
                gap,
            })
        })
        .collect();
    Ok(Verdict::from_violations(violations))
}

/// Checks `|f(u) − f(v)| ≥ w(uv)` on every G-edge.
pub fn verify_instance(inst: &Instance, f: &Labeling) -> Result<Verdict> {
    check_total(inst.order(), f)?;
    let violations = inst
        .weighted_edges()
        .filter_map(|(u, v, w)| {
            let gap = gap(f, u, v);
            (gap < w).then_some(Violation {
                u,
                v,
                relation: Relation::Weight(w),
                gap,
            })
        })
        .collect();
    Ok(Verdict::from_violations(violations))
}
