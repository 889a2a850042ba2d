//! The colour adjacency graph of a colouring: one vertex per class, and an
//! edge between two classes whenever some H-edge joins them.

use crate::equitable::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::Instance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorAdjacencyGraph {
    base: Graph,
    classes: Coloring,
}

impl ColorAdjacencyGraph {
    /// Graph on class indices.
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn classes(&self) -> &Coloring {
        &self.classes
    }
}

/// Requires `coloring` to be a proper colouring of the instance's G.
pub fn build_cgh(coloring: &Coloring, inst: &Instance) -> Result<ColorAdjacencyGraph> {
    if coloring.order() != inst.order() {
        return Err(Error::InvalidInput(format!(
            "colouring covers {} vertices, instance has {}",
            coloring.order(),
            inst.order()
        )));
    }
    if !coloring.is_proper(inst.g()) {
        return Err(Error::InvalidInput("colouring is not proper on G".into()));
    }
    let mut base = Graph::empty(coloring.num_classes());
    for (u, v) in inst.h().edges() {
        let (a, b) = (coloring.color_of(u), coloring.color_of(v));
        if !base.has_edge(a, b) {
            base.add_edge(a, b)?;
        }
    }
    Ok(ColorAdjacencyGraph {
        base,
        classes: coloring.clone(),
    })
}
