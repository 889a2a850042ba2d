//! Labeling with labels in `0..L` through an equitable colouring and a
//! hamilton path in the complement of its colour adjacency graph.

use crate::equitable::equitable_coloring;
use crate::error::{Error, Precondition, Result};
use crate::hamilton::hamilton_path;
use crate::labeling::{verify_instance, Instance, Labeling};

use super::bounds::bound_m;
use super::cgh::build_cgh;

/// Checks, in order, Δ(H) ≥ 1, Δ(G) ≤ Δ(H)², `L ≥ Δ(H)² + 1` and
/// `n ≤ M(L, Δ(H))`.
pub fn check_budget_preconditions(inst: &Instance, l: usize) -> Result<()> {
    let delta = inst.h().max_degree();
    if delta == 0 {
        return Err(Precondition::WeightTwoEdges.into());
    }
    let bound = delta * delta;
    let delta_g = inst.g().max_degree();
    if delta_g > bound {
        return Err(Precondition::DegreeRatio {
            max_degree_g: delta_g,
            bound,
        }
        .into());
    }
    if l < bound + 1 {
        return Err(Precondition::SpanBudget {
            budget: l,
            minimum: bound + 1,
        }
        .into());
    }
    let threshold = bound_m(l, delta)?;
    if inst.order() > threshold {
        return Err(Precondition::Order {
            order: inst.order(),
            budget: l,
            delta,
            threshold,
        }
        .into());
    }
    Ok(())
}

/// A labeling with every label in `0..L`. Label classes differ in size by
/// at most one, and when `n ≥ L` every label is used.
pub fn label_with_budget(inst: &Instance, l: usize) -> Result<Labeling> {
    check_budget_preconditions(inst, l)?;
    let n = inst.order();
    let f = if l > 2 * n {
        Labeling::new((0..n as u32).map(|i| 2 * i).collect())
    } else {
        let coloring = equitable_coloring(inst.g(), l)?;
        let cgh = build_cgh(&coloring, inst)?;
        let order = hamilton_path(&cgh.base().complement()).map_err(|e| match e {
            Error::Precondition(p) => Error::Internal(format!(
                "complement of the colour adjacency graph failed the path condition: {p}"
            )),
            other => other,
        })?;
        let mut labels = vec![0u32; n];
        for (position, &class) in order.vertices().iter().enumerate() {
            for &v in coloring.class(class) {
                labels[v] = position as u32;
            }
        }
        Labeling::new(labels)
    };
    if !verify_instance(inst, &f)?.is_valid() {
        return Err(Error::Internal(
            "budgeted labeling failed verification".into(),
        ));
    }
    Ok(f)
}
