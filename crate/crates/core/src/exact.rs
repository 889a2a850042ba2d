//! Exact minimum span by branch and bound, for small instances.
//!
//! Vertices are branched in descending G-degree order (ties by index) with
//! labels tried in ascending order. Each feasibility probe "span ≤ t" keeps
//! a bitset domain per vertex and prunes as soon as one empties. The first
//! branched vertex only takes labels in the lower half of `0..=t`, since
//! `x ↦ t − x` maps solutions to solutions.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{l21_as_instance, verify_instance, Instance, Labeling};
use crate::pipeline::chang_kuo_instance;

/// Largest supported order: spans stay below 2n − 1 ≤ 127, the width of a
/// domain bitset.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub optimum: u32,
    /// A labeling with minimum label 0 and span `optimum`.
    pub witness: Labeling,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Optimal(ExactResult),
    /// No labeling with span at most the budget exists.
    InfeasibleWithinBudget,
}

impl ExactOutcome {
    pub fn optimal(self) -> Option<ExactResult> {
        match self {
            ExactOutcome::Optimal(r) => Some(r),
            ExactOutcome::InfeasibleWithinBudget => None,
        }
    }
}

/// Minimum span of a `(G, H)` instance, optionally restricted to spans at
/// most `budget`.
pub fn exact_span(inst: &Instance, budget: Option<u32>) -> Result<ExactOutcome> {
    let n = inst.order();
    if n == 0 {
        return Err(Error::InvalidInput("instance has no vertices".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::Capability(format!(
            "exact search supports at most {MAX_ORDER} vertices, got {n}"
        )));
    }
    let mut incumbent = chang_kuo_instance(inst)?.normalized();
    let spread = Labeling::new((0..n as u32).map(|i| 2 * i).collect());
    if spread.span()? < incumbent.span()? {
        incumbent = spread;
    }
    let mut best_span = incumbent.span()?;
    let mut best = Some(incumbent);
    if let Some(b) = budget {
        if best_span > b {
            best = None;
            best_span = b + 1;
        }
    }
    let solver = Solver::new(inst);
    let floor = lower_bound(inst);
    while best_span > floor {
        match solver.feasible(best_span - 1) {
            Some(f) => {
                best_span = f.span()?;
                best = Some(f);
            }
            None => break,
        }
    }
    let Some(witness) = best else {
        return Ok(ExactOutcome::InfeasibleWithinBudget);
    };
    let witness = witness.normalized();
    if !verify_instance(inst, &witness)?.is_valid() {
        return Err(Error::Internal("exact witness failed verification".into()));
    }
    Ok(ExactOutcome::Optimal(ExactResult {
        optimum: best_span,
        witness,
    }))
}

/// λ₂,₁ of `g`.
pub fn exact_lambda(g: &Graph) -> Result<ExactResult> {
    exact_span(&l21_as_instance(g), None)?
        .optimal()
        .ok_or_else(|| Error::Internal("unbudgeted search reported infeasible".into()))
}

/// Span is at least ω(G) − 1 for a greedily found clique, and at least 2
/// when H has an edge.
fn lower_bound(inst: &Instance) -> u32 {
    let g = inst.g();
    let mut omega = 1;
    for v in 0..g.order() {
        let mut candidates = g.neighbors(v).to_vec();
        candidates.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
        let mut clique = vec![v];
        for u in candidates {
            if clique.iter().all(|&c| g.has_edge(c, u)) {
                clique.push(u);
            }
        }
        omega = omega.max(clique.len());
    }
    let h_bound = if inst.h().size() > 0 { 2 } else { 0 };
    (omega as u32 - 1).max(h_bound)
}

struct Solver {
    order: Vec<usize>,
    /// For each vertex, its G-neighbours with the required gap.
    constraints: Vec<Vec<(usize, u32)>>,
}

impl Solver {
    fn new(inst: &Instance) -> Self {
        let g = inst.g();
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let constraints = (0..n)
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .map(|&u| (u, inst.weight(u, v).expect("G-neighbour")))
                    .collect()
            })
            .collect();
        Solver { order, constraints }
    }

    /// A labeling within `0..=t`, if one exists.
    fn feasible(&self, t: u32) -> Option<Labeling> {
        let n = self.order.len();
        let full: u128 = if t >= 127 {
            u128::MAX
        } else {
            (1u128 << (t + 1)) - 1
        };
        let mut domains = vec![full; n];
        let first = self.order[0];
        domains[first] &= (1u128 << (t / 2 + 1)) - 1;
        let mut labels = vec![u32::MAX; n];
        if self.search(0, &mut domains, &mut labels) {
            Some(Labeling::new(labels))
        } else {
            None
        }
    }

    fn search(&self, depth: usize, domains: &mut [u128], labels: &mut [u32]) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let mut choices = domains[v];
        while choices != 0 {
            let label = choices.trailing_zeros();
            choices &= choices - 1;
            let saved: Vec<(usize, u128)> = self.constraints[v]
                .iter()
                .filter(|&&(u, _)| labels[u] == u32::MAX)
                .map(|&(u, _)| (u, domains[u]))
                .collect();
            let mut dead = false;
            for &(u, w) in &self.constraints[v] {
                if labels[u] != u32::MAX {
                    continue;
                }
                domains[u] &= !window(label, w);
                if domains[u] == 0 {
                    dead = true;
                    break;
                }
            }
            if !dead {
                labels[v] = label;
                if self.search(depth + 1, domains, labels) {
                    return true;
                }
                labels[v] = u32::MAX;
            }
            for (u, d) in saved {
                domains[u] = d;
            }
        }
        false
    }
}

/// Labels strictly within distance `w` of `label`.
fn window(label: u32, w: u32) -> u128 {
    let lo = label.saturating_sub(w - 1);
    let hi = (label + w - 1).min(127);
    let width = hi - lo + 1;
    let bits = if width >= 128 {
        u128::MAX
    } else {
        (1u128 << width) - 1
    };
    bits << lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::random::{gnp, random_subgraph};
    use crate::families::{cycle, path, petersen, random_tree};
    use crate::labeling::verify_l21;

    /// Smallest t admitting a labeling in `0..=t`, by plain enumeration in
    /// vertex index order.
    fn naive_span(inst: &Instance) -> u32 {
        fn extend(inst: &Instance, t: u32, labels: &mut Vec<u32>) -> bool {
            let v = labels.len();
            if v == inst.order() {
                return true;
            }
            for x in 0..=t {
                let ok = (0..v).all(|u| match inst.weight(u, v) {
                    Some(w) => labels[u].abs_diff(x) >= w,
                    None => true,
                });
                if ok {
                    labels.push(x);
                    if extend(inst, t, labels) {
                        return true;
                    }
                    labels.pop();
                }
            }
            false
        }
        (0..).find(|&t| extend(inst, t, &mut Vec::new())).unwrap()
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(exact_lambda(&path(1).unwrap()).unwrap().optimum, 0);
        assert_eq!(exact_lambda(&path(2).unwrap()).unwrap().optimum, 2);
        assert_eq!(exact_lambda(&path(3).unwrap()).unwrap().optimum, 3);
        assert_eq!(exact_lambda(&path(4).unwrap()).unwrap().optimum, 3);
        for n in 5..=12 {
            assert_eq!(exact_lambda(&path(n).unwrap()).unwrap().optimum, 4, "P_{n}");
        }
        for n in 3..=12 {
            assert_eq!(
                exact_lambda(&cycle(n).unwrap()).unwrap().optimum,
                4,
                "C_{n}"
            );
        }
    }

    #[test]
    fn petersen_is_nine() {
        let r = exact_lambda(&petersen()).unwrap();
        assert_eq!(r.optimum, 9);
        assert!(verify_l21(&petersen(), &r.witness).unwrap().is_valid());
    }

    #[test]
    fn budget_outcomes() {
        let inst = l21_as_instance(&cycle(7).unwrap());
        assert_eq!(
            exact_span(&inst, Some(3)).unwrap(),
            ExactOutcome::InfeasibleWithinBudget
        );
        let r = exact_span(&inst, Some(4)).unwrap().optimal().unwrap();
        assert_eq!(r.optimum, 4);
        assert_eq!(r.witness.labels().iter().min(), Some(&0));
    }

    #[test]
    fn capability_limit() {
        let g = Graph::empty(MAX_ORDER + 1);
        assert!(matches!(
            exact_span(&l21_as_instance(&g), None),
            Err(Error::Capability(_))
        ));
        assert!(exact_span(&l21_as_instance(&Graph::empty(0)), None).is_err());
    }

    #[test]
    fn trees_are_delta_plus_one_or_two() {
        for seed in 0..20 {
            let t = random_tree(4 + seed as usize % 9, seed).unwrap();
            let d = t.max_degree() as u32;
            let lam = exact_lambda(&t).unwrap().optimum;
            assert!(lam == d + 1 || lam == d + 2);
        }
    }

    #[test]
    fn matches_enumeration() {
        for seed in 0..60 {
            let n = 1 + seed as usize % 7;
            let f = gnp(n, 0.45, seed);
            let inst = l21_as_instance(&f);
            assert_eq!(
                exact_lambda(&f).unwrap().optimum,
                naive_span(&inst),
                "seed {seed}"
            );
            let g = gnp(n, 0.6, seed + 1000);
            let h = random_subgraph(&g, 0.5, seed);
            let inst = Instance::new(g, h).unwrap();
            let r = exact_span(&inst, None).unwrap().optimal().unwrap();
            assert_eq!(r.optimum, naive_span(&inst), "pair seed {seed}");
        }
    }

    #[test]
    fn deterministic_witness() {
        let g = gnp(9, 0.4, 3);
        assert_eq!(exact_lambda(&g).unwrap(), exact_lambda(&g).unwrap());
    }

    #[test]
    fn windows() {
        assert_eq!(window(0, 1), 0b1);
        assert_eq!(window(3, 2), 0b11100);
        assert_eq!(window(0, 2), 0b11);
    }
}
