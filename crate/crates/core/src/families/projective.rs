//! Points of the Galois plane PG₂(q) and its polarity graph.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::field::{FieldElement, FiniteField};

/// A point of PG₂(q), normalized so that its first nonzero coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: [FieldElement; 3],
}

impl ProjectivePoint {
    /// Canonical representative of the class of `coords`.
    pub fn new(field: &FiniteField, coords: [FieldElement; 3]) -> Result<Self> {
        let lead = coords
            .iter()
            .copied()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::Domain("(0, 0, 0) is not a projective point".into()))?;
        let scale = field.inv(lead)?;
        Ok(ProjectivePoint {
            coords: coords.map(|c| field.mul(scale, c)),
        })
    }

    pub fn coords(&self) -> [FieldElement; 3] {
        self.coords
    }

    /// The symmetric bilinear form x₁y₁ + x₂y₂ + x₃y₃.
    pub fn dot(&self, other: &ProjectivePoint, field: &FiniteField) -> FieldElement {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .fold(field.zero(), |acc, (&a, &b)| {
                field.add(acc, field.mul(a, b))
            })
    }

    /// Self-orthogonal points; these have degree q in the polarity graph.
    pub fn is_absolute(&self, field: &FiniteField) -> bool {
        self.dot(self, field).is_zero()
    }
}

/// All q² + q + 1 points in lexicographic order of normalized coordinates.
pub fn projective_points(field: &FiniteField) -> Vec<ProjectivePoint> {
    let elems: Vec<FieldElement> = field.elements().collect();
    let one = field.one();
    let mut points = Vec::with_capacity(field.order().pow(2) + field.order() + 1);
    for &a in &elems {
        for &b in &elems {
            for &c in &elems {
                let lead = [a, b, c].into_iter().find(|x| !x.is_zero());
                if lead == Some(one) {
                    points.push(ProjectivePoint { coords: [a, b, c] });
                }
            }
        }
    }
    points
}

/// Polarity graph of PG₂(q): distinct points are adjacent iff orthogonal.
/// Absolute points would carry loops and are left with degree q instead.
pub fn polarity_graph(field: &FiniteField) -> Graph {
    let points = projective_points(field);
    let mut g = Graph::empty(points.len());
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            if p.dot(q, field).is_zero() {
                g.add_edge(i, j).expect("points are distinct");
            }
        }
    }
    g
}

/// The polarity graph plus one vertex joined to every degree-q vertex,
/// giving a (q+1)-regular diameter-two graph on q² + q + 2 vertices.
/// Only defined in characteristic 2.
pub fn erdos_extension(field: &FiniteField) -> Result<Graph> {
    if field.characteristic() != 2 {
        return Err(Error::InvalidInput(format!(
            "the extension needs characteristic 2, got {}",
            field.characteristic()
        )));
    }
    let base = polarity_graph(field);
    let q = field.order();
    let n = base.order();
    let mut g = Graph::empty(n + 1);
    for (u, v) in base.edges() {
        g.add_edge(u, v)?;
    }
    for v in 0..n {
        if base.degree(v) == q {
            g.add_edge(v, n)?;
        }
    }
    Ok(g)
}
