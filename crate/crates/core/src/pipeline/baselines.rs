//! Greedy baselines: first fit (span at most Δ² + 2Δ) and the Chang–Kuo
//! class-by-class construction (span at most Δ² + Δ).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{l21_as_instance, verify_instance, Instance, Labeling};

fn verified(inst: &Instance, f: Labeling, method: &str) -> Result<Labeling> {
    if verify_instance(inst, &f)?.is_valid() {
        Ok(f)
    } else {
        Err(Error::Internal(format!(
            "{method} produced an invalid labeling"
        )))
    }
}

/// Each vertex in ascending order takes the least label compatible with
/// its already labeled G-neighbours.
pub fn first_fit_instance(inst: &Instance) -> Result<Labeling> {
    let n = inst.order();
    let mut labels: Vec<Option<u32>> = vec![None; n];
    for v in 0..n {
        let mut forbidden = Vec::new();
        for &u in inst.g().neighbors(v) {
            if let Some(lu) = labels[u] {
                let w = inst.weight(u, v).expect("u is a G-neighbour");
                let lo = lu.saturating_sub(w - 1);
                forbidden.extend(lo..lu + w);
            }
        }
        forbidden.sort_unstable();
        let mut label = 0;
        for x in forbidden {
            if x == label {
                label += 1;
            } else if x > label {
                break;
            }
        }
        labels[v] = Some(label);
    }
    let f = Labeling::new(
        labels
            .into_iter()
            .map(|l| l.expect("all labeled"))
            .collect(),
    );
    verified(inst, f, "first fit")
}

/// First fit on `(F², F)`.
pub fn first_fit(g: &Graph) -> Result<Labeling> {
    first_fit_instance(&l21_as_instance(g))
}

/// Label classes built one at a time: `S_0` is a greedy maximal independent
/// set of G; afterwards `S_{i+1}` is a greedy maximal G-independent subset
/// of the unlabeled vertices with no H-neighbour in `S_i`. Vertices of
/// `S_i` get label `i`.
pub fn chang_kuo_instance(inst: &Instance) -> Result<Labeling> {
    let n = inst.order();
    let mut labels: Vec<Option<u32>> = vec![None; n];
    let mut remaining = n;
    let mut previous: Vec<usize> = Vec::new();
    let mut label = 0u32;
    let mut near_previous = vec![false; n];
    while remaining > 0 {
        near_previous.iter_mut().for_each(|x| *x = false);
        for &p in &previous {
            for &u in inst.h().neighbors(p) {
                near_previous[u] = true;
            }
        }
        let mut blocked = near_previous.clone();
        let mut class = Vec::new();
        for v in 0..n {
            if labels[v].is_none() && !blocked[v] {
                class.push(v);
                for &u in inst.g().neighbors(v) {
                    blocked[u] = true;
                }
            }
        }
        for &v in &class {
            labels[v] = Some(label);
        }
        remaining -= class.len();
        previous = class;
        label += 1;
    }
    let f = Labeling::new(
        labels
            .into_iter()
            .map(|l| l.expect("all labeled"))
            .collect(),
    );
    verified(inst, f, "Chang–Kuo")
}

/// Chang–Kuo on `(F², F)`.
pub fn chang_kuo(g: &Graph) -> Result<Labeling> {
    chang_kuo_instance(&l21_as_instance(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::random::gnp;
    use crate::labeling::verify_l21;

    #[test]
    fn triangles() {
        let k3 = Graph::complete(3);
        assert_eq!(first_fit(&k3).unwrap().labels(), &[0, 2, 4]);
        assert_eq!(chang_kuo(&k3).unwrap().labels(), &[0, 2, 4]);
    }

    #[test]
    fn trivial_graphs() {
        assert_eq!(first_fit(&Graph::empty(4)).unwrap().labels(), &[0; 4]);
        assert_eq!(chang_kuo(&Graph::empty(1)).unwrap().labels(), &[0]);
        assert_eq!(chang_kuo(&Graph::empty(3)).unwrap().labels(), &[0; 3]);
    }

    #[test]
    fn small_cliques_are_valid() {
        for n in 1..8 {
            let k = Graph::complete(n);
            for f in [first_fit(&k).unwrap(), chang_kuo(&k).unwrap()] {
                assert!(verify_l21(&k, &f).unwrap().is_valid());
                assert_eq!(f.span().unwrap() as usize, 2 * (n - 1));
            }
        }
    }

    #[test]
    fn bounds_hold() {
        for seed in 0..200 {
            let g = gnp(25, 0.12, seed);
            let d = g.max_degree() as u32;
            assert!(first_fit(&g).unwrap().span().unwrap() <= d * d + 2 * d);
            assert!(chang_kuo(&g).unwrap().span().unwrap() <= d * d + d);
        }
    }

    #[test]
    fn instance_first_fit_respects_weights() {
        let g = crate::families::path(3).unwrap();
        let h = Graph::from_edges(3, [(0, 1)]).unwrap();
        let inst = Instance::new(g, h).unwrap();
        assert_eq!(first_fit_instance(&inst).unwrap().labels(), &[0, 2, 0]);
        assert_eq!(chang_kuo_instance(&inst).unwrap().labels(), &[0, 2, 0]);
    }
}
