//! The order threshold `M(L, Δ) = (L − Δ)(⌊(L − 1)/(2Δ)⌋ + 1) − 1` below
//! which a span of `L − 1` is guaranteed.

use crate::error::{Error, Precondition, Result};
use crate::labeling::Instance;

/// `M(L, Δ)`; requires `Δ ≥ 1` and `L ≥ Δ² + 1`.
pub fn bound_m(l: usize, delta: usize) -> Result<usize> {
    if delta == 0 || l < delta * delta + 1 {
        return Err(Error::InvalidInput(format!(
            "the order threshold needs Δ ≥ 1 and L ≥ Δ² + 1 (got L = {l}, Δ = {delta})"
        )));
    }
    Ok((l - delta) * ((l - 1) / (2 * delta) + 1) - 1)
}

/// Whether an instance meets the size conditions for a given `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    /// Δ(H).
    pub delta: usize,
    /// Δ(G).
    pub delta_g: usize,
    pub l: usize,
    pub m: usize,
    pub applicable: bool,
}

fn degrees(inst: &Instance) -> Result<(usize, usize)> {
    let delta = inst.h().max_degree();
    if delta == 0 {
        return Err(Precondition::WeightTwoEdges.into());
    }
    Ok((delta, inst.g().max_degree()))
}

pub fn bound_report(inst: &Instance, l: usize) -> Result<BoundReport> {
    let (delta, delta_g) = degrees(inst)?;
    let m = bound_m(l, delta)?;
    Ok(BoundReport {
        delta,
        delta_g,
        l,
        m,
        applicable: delta_g <= delta * delta && inst.order() <= m,
    })
}

/// Reports for every `L` in `Δ² + 1 ..= Δ² + Δ`.
pub fn bound_table(inst: &Instance) -> Result<Vec<BoundReport>> {
    let (delta, _) = degrees(inst)?;
    (delta * delta + 1..=delta * delta + delta)
        .map(|l| bound_report(inst, l))
        .collect()
}

/// The least `L ≥ Δ² + 1` for which every precondition of the budgeted
/// construction holds. Such an `L` always exists once Δ(G) ≤ Δ(H)², since
/// `M(2n + 1, Δ) ≥ n`.
pub fn least_admissible_budget(inst: &Instance) -> Result<usize> {
    let (delta, delta_g) = degrees(inst)?;
    if delta_g > delta * delta {
        return Err(Precondition::DegreeRatio {
            max_degree_g: delta_g,
            bound: delta * delta,
        }
        .into());
    }
    let n = inst.order();
    let first = delta * delta + 1;
    (first..=first.max(2 * n + 1))
        .find(|&l| bound_m(l, delta).is_ok_and(|m| n <= m))
        .ok_or_else(|| Error::Internal("no admissible budget below 2n + 1".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_values() {
        assert_eq!(bound_m(10, 3).unwrap(), 13);
        assert_eq!(bound_m(17, 4).unwrap(), 38);
        assert_eq!(bound_m(50, 7).unwrap(), 171);
        assert_eq!(bound_m(5, 2).unwrap(), 5);
        assert_eq!(bound_m(2, 1).unwrap(), 0);
        assert!(bound_m(9, 3).is_err());
        assert!(bound_m(5, 0).is_err());
    }

    #[test]
    fn specializations() {
        for d in 1..=50usize {
            assert_eq!(
                bound_m(d * d + 1, d).unwrap(),
                (d / 2 + 1) * (d * d - d + 1) - 1
            );
        }
        for d in 3..=50usize {
            assert_eq!(
                bound_m(d * d + d - 2, d).unwrap(),
                (d / 2 + 1) * (d * d - 2) - 1
            );
        }
    }

    /// Least L by scanning every candidate with the full precondition check.
    fn scan(inst: &Instance) -> Option<usize> {
        let d = inst.h().max_degree();
        (d * d + 1..=d * d + 1 + 2 * inst.order())
            .find(|&l| crate::pipeline::check_budget_preconditions(inst, l).is_ok())
    }

    #[test]
    fn least_budget_is_least() {
        use crate::families::random::{bounded_degree, gnp};
        use crate::labeling::l21_as_instance;
        for seed in 0..200 {
            let n = 2 + seed as usize % 60;
            let g = if seed % 2 == 0 {
                bounded_degree(n, 1 + seed as usize % 5, 3 * n, seed)
            } else {
                gnp(n, 0.1, seed)
            };
            let inst = l21_as_instance(&g);
            match least_admissible_budget(&inst) {
                Ok(l) => assert_eq!(Some(l), scan(&inst), "seed {seed}"),
                Err(_) => assert_eq!(g.max_degree(), 0),
            }
        }
    }

    proptest! {
        #[test]
        fn monotone_in_l(d in 1usize..=20, a in 0usize..200, b in 0usize..200) {
            let (lo, hi) = (a.min(b) + d * d + 1, a.max(b) + d * d + 1);
            prop_assert!(bound_m(hi, d).unwrap() >= bound_m(lo, d).unwrap());
        }
    }
}
