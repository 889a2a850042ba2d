//! Injective labelings of span `n − 1` from a hamilton path of the
//! complement.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamilton::{hamilton_path, posa_path_condition};
use crate::labeling::{verify_l21, Labeling};

/// Labels the i-th vertex of a hamilton path of the complement with `i`.
/// Fails with a capability error when the complement does not satisfy the
/// path form of Pósa's condition; that is not a proof that no such labeling
/// exists.
pub fn injective_labeling(g: &Graph) -> Result<Labeling> {
    let n = g.order();
    if n == 0 {
        return Err(Error::InvalidInput("empty graph".into()));
    }
    let complement = g.complement();
    if !posa_path_condition(&complement) {
        return Err(Error::Capability(
            "the complement does not meet the path degree condition".into(),
        ));
    }
    let path = hamilton_path(&complement)?;
    let mut labels = vec![0u32; n];
    for (i, &v) in path.vertices().iter().enumerate() {
        labels[v] = i as u32;
    }
    let f = Labeling::new(labels);
    if !verify_l21(g, &f)?.is_valid() {
        return Err(Error::Internal(
            "injective labeling failed verification".into(),
        ));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, petersen};

    #[test]
    fn petersen_injective() {
        let f = injective_labeling(&petersen()).unwrap();
        assert!(f.is_injective());
        assert_eq!(f.span().unwrap(), 9);
    }

    #[test]
    fn complete_graphs_unsupported() {
        for n in 2..6 {
            assert!(matches!(
                injective_labeling(&Graph::complete(n)),
                Err(Error::Capability(_))
            ));
        }
    }

    #[test]
    fn path_five() {
        let p5 = path(5).unwrap();
        let f = injective_labeling(&p5).unwrap();
        assert!(f.is_injective());
        assert_eq!(f.span().unwrap(), 4);
        // the order (2, 4, 1, 3, 5) in 1-based names is one such labeling
        let known = Labeling::new(vec![2, 0, 3, 1, 4]);
        assert!(verify_l21(&p5, &known).unwrap().is_valid());
    }
}
