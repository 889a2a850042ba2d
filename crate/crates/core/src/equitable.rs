//! Equitable colourings: proper colourings whose class sizes differ by at
//! most one.
//!
//! A greedy balanced placement is tried first. When it is not equitable the
//! Kierstead–Kostochka construction takes over: edges are inserted one at a
//! time into an equitable colouring of the edgeless graph, and every
//! insertion that creates a conflict is repaired by moving a vertex and then
//! rebalancing through the "can move to" digraph on colour classes.

use crate::error::{Error, Precondition, Result};
use crate::graph::Graph;

/// An ordered partition of the vertices into `L` classes (some possibly
/// empty). Classes are stored in ascending vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
    assignment: Vec<usize>,
}

impl Coloring {
    /// Builds a colouring from `count` classes given per vertex.
    pub fn from_assignment(assignment: Vec<usize>, count: usize) -> Result<Self> {
        let mut classes = vec![Vec::new(); count];
        for (v, &c) in assignment.iter().enumerate() {
            classes
                .get_mut(c)
                .ok_or_else(|| {
                    Error::InvalidInput(format!("vertex {v} has colour {c} but only {count} exist"))
                })?
                .push(v);
        }
        Ok(Coloring {
            classes,
            assignment,
        })
    }

    /// Builds a colouring of `0..n` from explicit classes, which must
    /// partition the vertex set.
    pub fn from_classes(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut assignment = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                let slot = assignment.get_mut(v).ok_or(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                })?;
                if *slot != usize::MAX {
                    return Err(Error::InvalidInput(format!(
                        "vertex {v} appears in more than one class"
                    )));
                }
                *slot = c;
            }
        }
        if let Some(v) = assignment.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidInput(format!("vertex {v} has no class")));
        }
        Coloring::from_assignment(assignment, classes.len())
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn order(&self) -> usize {
        self.assignment.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// No edge of `g` lies inside a class.
    pub fn is_proper(&self, g: &Graph) -> bool {
        g.order() == self.order()
            && g.edges()
                .all(|(u, v)| self.assignment[u] != self.assignment[v])
    }

    /// Class sizes differ by at most one.
    pub fn is_equitable(&self) -> bool {
        let sizes = self.class_sizes();
        match (sizes.iter().min(), sizes.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }
}

/// A proper colouring of `g` with exactly `colors` classes whose sizes differ
/// by at most one. Requires `colors > Δ(g)`.
pub fn equitable_coloring(g: &Graph, colors: usize) -> Result<Coloring> {
    let max_degree = g.max_degree();
    if colors <= max_degree {
        return Err(Precondition::TooFewColors { colors, max_degree }.into());
    }
    let coloring = match greedy(g, colors) {
        Some(c) => c,
        None => Engine::run(g, colors)?,
    };
    if !coloring.is_proper(g) || !coloring.is_equitable() {
        return Err(Error::Internal(format!(
            "equitable colouring produced sizes {:?} (proper: {})",
            coloring.class_sizes(),
            coloring.is_proper(g)
        )));
    }
    Ok(coloring)
}

/// Vertices in descending degree order go to the smallest class that holds
/// none of their neighbours. Returns the result only when it is equitable.
fn greedy(g: &Graph, colors: usize) -> Option<Coloring> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut assignment = vec![usize::MAX; n];
    let mut sizes = vec![0usize; colors];
    let mut blocked = vec![usize::MAX; colors];
    for &v in &order {
        for &u in g.neighbors(v) {
            if assignment[u] != usize::MAX {
                blocked[assignment[u]] = v;
            }
        }
        let c = (0..colors)
            .filter(|&c| blocked[c] != v)
            .min_by_key(|&c| (sizes[c], c))?;
        assignment[v] = c;
        sizes[c] += 1;
    }
    let coloring = Coloring::from_assignment(assignment, colors).ok()?;
    coloring.is_equitable().then_some(coloring)
}

/// Upper bound on calls of the rebalancing procedure per conflict; only a
/// defect could exhaust it.
const WORK_LIMIT: usize = 1 << 20;

#[derive(Debug)]
struct Stall;

/// State of the Kierstead–Kostochka construction on the padded graph.
struct Engine {
    l: usize,
    /// Edges inserted so far.
    adj: Vec<Vec<usize>>,
    color: Vec<usize>,
    /// `cnt[v * l + c]`: neighbours of `v` in class `c`.
    cnt: Vec<u32>,
    /// `h[x * l + y]`: vertices of class `x` with no neighbour in class `y`.
    h: Vec<u32>,
    members: Vec<Vec<usize>>,
    pos: Vec<usize>,
    /// Every recolouring as `(vertex, from, to)`, for rollback.
    log: Vec<(usize, usize, usize)>,
    work: usize,
}

impl Engine {
    fn run(g: &Graph, l: usize) -> Result<Coloring> {
        let engine = Self::build(g, l)?;
        Coloring::from_assignment(engine.color[..g.order()].to_vec(), l)
    }

    /// Inserts every edge, repairing conflicts as they appear.
    fn build(g: &Graph, l: usize) -> Result<Engine> {
        let n = g.order();
        let pad = (l - n % l) % l;
        let total = n + pad;
        let size = total / l;
        let mut engine = Engine {
            l,
            adj: vec![Vec::new(); total],
            color: (0..total).map(|v| v % l).collect(),
            cnt: vec![0; total * l],
            h: vec![size as u32; l * l],
            members: vec![Vec::with_capacity(size + 1); l],
            pos: vec![0; total],
            log: Vec::new(),
            work: 0,
        };
        for v in 0..total {
            let c = v % l;
            engine.pos[v] = engine.members[c].len();
            engine.members[c].push(v);
        }
        // the padding is a clique, so padded vertices end in distinct classes
        let padded_neighbors = |u: usize| -> Vec<usize> {
            if u < n {
                g.neighbors(u).iter().copied().filter(|&v| v > u).collect()
            } else {
                (u + 1..total).collect()
            }
        };
        for u in 0..total {
            for v in padded_neighbors(u) {
                engine.insert_edge(u, v);
                if engine.color[u] == engine.color[v] {
                    engine.repair(u, v)?;
                    if engine.members.iter().any(|m| m.len() != size) {
                        return Err(Error::Internal(
                            "class sizes unbalanced after a repair".into(),
                        ));
                    }
                }
            }
        }
        Ok(engine)
    }

    fn at(&self, v: usize, c: usize) -> u32 {
        self.cnt[v * self.l + c]
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u].push(v);
        self.adj[v].push(u);
        for (a, b) in [(u, v), (v, u)] {
            let (ca, cb) = (self.color[a], self.color[b]);
            let slot = &mut self.cnt[a * self.l + cb];
            if *slot == 0 {
                self.h[ca * self.l + cb] -= 1;
            }
            *slot += 1;
        }
    }

    fn recolor(&mut self, v: usize, to: usize) {
        let from = self.color[v];
        self.log.push((v, from, to));
        self.recolor_unlogged(v, to);
    }

    fn recolor_unlogged(&mut self, v: usize, to: usize) {
        let l = self.l;
        let from = self.color[v];
        let p = self.pos[v];
        self.members[from].swap_remove(p);
        if let Some(&moved) = self.members[from].get(p) {
            self.pos[moved] = p;
        }
        self.pos[v] = self.members[to].len();
        self.members[to].push(v);
        for y in 0..l {
            if self.cnt[v * l + y] == 0 {
                self.h[from * l + y] -= 1;
                self.h[to * l + y] += 1;
            }
        }
        self.color[v] = to;
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            let cu = self.color[u];
            let slot = &mut self.cnt[u * l + from];
            *slot -= 1;
            if *slot == 0 {
                self.h[cu * l + from] += 1;
            }
            let slot = &mut self.cnt[u * l + to];
            if *slot == 0 {
                self.h[cu * l + to] -= 1;
            }
            *slot += 1;
        }
    }

    fn rollback(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (v, from, _) = self.log.pop().expect("log longer than mark");
            self.recolor_unlogged(v, from);
        }
    }

    /// Resolves the monochromatic edge `uv`: one endpoint moves to a class
    /// free of its neighbours, leaving one class short and one over.
    fn repair(&mut self, u: usize, v: usize) -> Result<()> {
        self.work = 0;
        let everything = vec![true; self.l];
        for x in [u, v] {
            let from = self.color[x];
            let targets: Vec<usize> = (0..self.l)
                .filter(|&c| c != from && self.at(x, c) == 0)
                .collect();
            for to in targets {
                let mark = self.log.len();
                self.recolor(x, to);
                if self.balance(from, to, &everything, 0).is_ok() {
                    self.log.clear();
                    return Ok(());
                }
                self.rollback(mark);
            }
        }
        Err(Error::Internal(format!(
            "equitable repair stalled on edge {{{u}, {v}}}"
        )))
    }

    fn witness(&self, x: usize, y: usize, avoid: &[usize]) -> Option<usize> {
        self.members[x]
            .iter()
            .copied()
            .find(|&v| self.at(v, y) == 0 && !avoid.contains(&v))
    }

    /// Moves one vertex along each consecutive pair of `path`, choosing each
    /// witness against the current state.
    fn shift(&mut self, path: &[usize], avoid: &[usize]) -> bool {
        for pair in path.windows(2) {
            match self.witness(pair[0], pair[1], avoid) {
                Some(x) => self.recolor(x, pair[1]),
                None => return false,
            }
        }
        true
    }

    /// Classes among `allowed` that can reach `target`, with BFS-tree parent
    /// pointers toward `target` and the BFS order.
    fn reaching(&self, target: usize, allowed: &[bool]) -> (Vec<bool>, Vec<usize>, Vec<usize>) {
        let l = self.l;
        let mut seen = vec![false; l];
        let mut parent = vec![usize::MAX; l];
        let mut order = vec![target];
        seen[target] = true;
        let mut i = 0;
        while i < order.len() {
            let y = order[i];
            i += 1;
            for x in 0..l {
                if allowed[x] && !seen[x] && self.h[x * l + y] > 0 {
                    seen[x] = true;
                    parent[x] = y;
                    order.push(x);
                }
            }
        }
        (seen, parent, order)
    }

    /// Classes among `allowed` reachable from `source`, with parent pointers
    /// toward `source`.
    fn reached(&self, source: usize, allowed: &[bool]) -> (Vec<bool>, Vec<usize>) {
        let l = self.l;
        let mut seen = vec![false; l];
        let mut parent = vec![usize::MAX; l];
        let mut queue = vec![source];
        seen[source] = true;
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for y in 0..l {
                if allowed[y] && !seen[y] && self.h[x * l + y] > 0 {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push(y);
                }
            }
        }
        (seen, parent)
    }

    fn tree_path(from: usize, parent: &[usize]) -> Vec<usize> {
        let mut path = vec![from];
        let mut x = from;
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    }

    /// Makes the colouring restricted to `allowed` equitable, given that
    /// `minus` is one short and `plus` one over while every other allowed
    /// class has the common size.
    fn balance(
        &mut self,
        minus: usize,
        plus: usize,
        allowed: &[bool],
        depth: usize,
    ) -> Result<(), Stall> {
        self.work += 1;
        if self.work > WORK_LIMIT || depth > 2 * self.l + 8 {
            return Err(Stall);
        }
        let (accessible, parent, order) = self.reaching(minus, allowed);
        if accessible[plus] {
            let path = Self::tree_path(plus, &parent);
            let mark = self.log.len();
            if self.shift(&path, &[]) {
                return Ok(());
            }
            self.rollback(mark);
            return Err(Stall);
        }
        let rest: Vec<bool> = (0..self.l).map(|c| allowed[c] && !accessible[c]).collect();
        if self.move_solo(plus, &parent, &order, &rest, depth)? {
            return Ok(());
        }
        self.double_solo(plus, &parent, &order, &rest, depth)
    }

    /// A vertex `z` of an accessible class `w` moves to another accessible
    /// class, its solo neighbour `y` in an inaccessible class takes its
    /// place, and the inaccessible classes are balanced recursively.
    fn move_solo(
        &mut self,
        plus: usize,
        parent: &[usize],
        order: &[usize],
        rest: &[bool],
        depth: usize,
    ) -> Result<bool, Stall> {
        for strict in [true, false] {
            for &w in order.iter().rev() {
                let candidates: Vec<(usize, usize, usize)> = self.members[w]
                    .iter()
                    .flat_map(|&z| {
                        let targets: Vec<usize> = order
                            .iter()
                            .copied()
                            .filter(|&x| {
                                x != w
                                    && self.at(z, x) == 0
                                    && Self::tree_path(x, parent).contains(&w) != strict
                            })
                            .collect();
                        let solos: Vec<usize> = self.adj[z]
                            .iter()
                            .copied()
                            .filter(|&y| rest[self.color[y]] && self.at(y, w) == 1)
                            .collect();
                        targets
                            .into_iter()
                            .flat_map(move |x| solos.clone().into_iter().map(move |y| (z, x, y)))
                            .collect::<Vec<_>>()
                    })
                    .collect();
                for (z, x, y) in candidates {
                    let mark = self.log.len();
                    let lacking = self.color[y];
                    if self.color[z] != w || self.at(z, x) != 0 {
                        continue;
                    }
                    self.recolor(z, x);
                    if self.at(y, w) != 0 {
                        self.rollback(mark);
                        continue;
                    }
                    self.recolor(y, w);
                    let path = Self::tree_path(x, parent);
                    if !self.shift(&path, &[]) {
                        self.rollback(mark);
                        continue;
                    }
                    if lacking == plus {
                        return Ok(true);
                    }
                    match self.balance(lacking, plus, rest, depth + 1) {
                        Ok(()) => return Ok(true),
                        Err(Stall) => {
                            self.rollback(mark);
                            if self.work > WORK_LIMIT {
                                return Err(Stall);
                            }
                        }
                    }
                }
            }
        }
        Ok(false)
    }

    /// A vertex `w` of an accessible class has two non-adjacent solo
    /// neighbours among the classes reachable from `plus`. One of them
    /// replaces `w`, `w` moves to a class free of its neighbours, and the
    /// smaller system is balanced recursively.
    fn double_solo(
        &mut self,
        plus: usize,
        parent: &[usize],
        order: &[usize],
        rest: &[bool],
        depth: usize,
    ) -> Result<(), Stall> {
        let l = self.l;
        let (forward, fparent) = self.reached(plus, rest);
        // greedy independent set over the forward classes, `plus` first
        let mut independent = Vec::new();
        let mut covered = vec![false; self.color.len()];
        let forward_classes =
            std::iter::once(plus).chain((0..l).filter(|&c| forward[c] && c != plus));
        for c in forward_classes {
            for &z in &self.members[c] {
                if !covered[z] {
                    independent.push(z);
                    covered[z] = true;
                    for &u in &self.adj[z] {
                        covered[u] = true;
                    }
                }
            }
        }
        let mut in_set = vec![false; self.color.len()];
        for &z in &independent {
            in_set[z] = true;
        }
        let mut attempts = Vec::new();
        for &wc in order.iter().rev() {
            for &w in &self.members[wc] {
                let solos: Vec<usize> = self.adj[w]
                    .iter()
                    .copied()
                    .filter(|&z| in_set[z] && forward[self.color[z]] && self.at(z, wc) == 1)
                    .collect();
                if solos.len() >= 2 {
                    for &z1 in &solos {
                        attempts.push((wc, w, z1, solos.clone()));
                    }
                }
            }
        }
        for (wc, w, z1, solos) in attempts {
            let mark = self.log.len();
            let w_path = Self::tree_path(wc, parent);
            if self.color[w] != wc || !self.shift(&w_path, &[w]) {
                self.rollback(mark);
                continue;
            }
            let z1_class = self.color[z1];
            let mut up = Self::tree_path(z1_class, &fparent);
            up.reverse();
            if !self.shift(&up, &solos) || self.color[z1] != z1_class {
                self.rollback(mark);
                continue;
            }
            self.recolor(z1, wc);
            let target = (0..l)
                .filter(|&c| c != wc && rest[c] && self.at(w, c) == 0)
                .min_by_key(|&c| (!forward[c], c));
            let Some(w_plus) = target else {
                self.rollback(mark);
                continue;
            };
            self.recolor(w, w_plus);
            if self.at(z1, wc) != 0 {
                self.rollback(mark);
                continue;
            }
            let mut sub = forward.clone();
            sub[wc] = true;
            sub[w_plus] = true;
            match self.balance(wc, w_plus, &sub, depth + 1) {
                Ok(()) => return Ok(()),
                Err(Stall) => {
                    self.rollback(mark);
                    if self.work > WORK_LIMIT {
                        return Err(Stall);
                    }
                }
            }
        }
        Err(Stall)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, random::bounded_degree, random::gnp};

    fn check(g: &Graph, l: usize) -> Coloring {
        let c = equitable_coloring(g, l).unwrap();
        assert_eq!(c.num_classes(), l);
        assert!(c.is_proper(g));
        assert!(c.is_equitable());
        let n = g.order();
        let big = c
            .class_sizes()
            .iter()
            .filter(|&&s| s == n.div_ceil(l))
            .count();
        if !n.is_multiple_of(l) {
            assert_eq!(big, n % l);
        }
        c
    }

    /// Exhaustive search for a proper equitable colouring.
    fn exists_equitable(g: &Graph, l: usize) -> bool {
        let n = g.order();
        let mut colors = vec![0usize; n];
        loop {
            let c = Coloring::from_assignment(colors.clone(), l).unwrap();
            if c.is_proper(g) && c.is_equitable() {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                colors[i] += 1;
                if colors[i] < l {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn edgeless_split() {
        let c = check(&Graph::empty(5), 2);
        let mut sizes = c.class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn complete_graph_singletons() {
        let c = check(&Graph::complete(4), 4);
        assert_eq!(c.class_sizes(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn five_cycle_three_colours() {
        let c5 = cycle(5).unwrap();
        assert!(exists_equitable(&c5, 3));
        let c = check(&c5, 3);
        let mut sizes = c.class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 2]);
    }

    #[test]
    fn too_few_colours() {
        let err = equitable_coloring(&Graph::complete(4), 3).unwrap_err();
        assert!(matches!(
            err,
            Error::Precondition(Precondition::TooFewColors { .. })
        ));
    }

    #[test]
    fn more_colours_than_vertices() {
        let c = check(&cycle(5).unwrap(), 9);
        assert!(c.class_sizes().iter().all(|&s| s <= 1));
    }

    #[test]
    fn engine_alone_is_equitable() {
        for seed in 0..300 {
            let n = 2 + (seed as usize * 7) % 40;
            let g = gnp(n, 0.1 + (seed % 7) as f64 * 0.1, seed);
            for l in [g.max_degree() + 1, g.max_degree() + 2] {
                let c = Engine::run(&g, l).unwrap();
                assert!(c.is_proper(&g), "seed {seed}");
                assert!(c.is_equitable(), "seed {seed}");
            }
        }
    }

    #[test]
    fn bipartite_tight() {
        // K_{m,m} with m + 1 colours
        for m in 2..8 {
            let mut g = Graph::empty(2 * m);
            for u in 0..m {
                for v in m..2 * m {
                    g.add_edge(u, v).unwrap();
                }
            }
            check(&g, m + 1);
            let c = Engine::run(&g, m + 1).unwrap();
            assert!(c.is_proper(&g) && c.is_equitable());
        }
    }

    #[test]
    fn sweep_random_graphs() {
        for seed in 0..200 {
            let g = bounded_degree(60, 3 + (seed % 5) as usize, 400, seed);
            check(&g, g.max_degree() + 1);
        }
    }

    #[test]
    fn balance_restores_after_single_moves() {
        use rand::{Rng, SeedableRng};
        for seed in 0..150u64 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = 4 + rng.gen_range(0..40);
            let g = gnp(n, 0.2 + 0.6 * rng.gen::<f64>(), seed);
            let l = g.max_degree() + 1;
            let n_pad = n.div_ceil(l) * l;
            let mut e = Engine::build(&g, l).unwrap();
            for _ in 0..30 {
                // move one vertex to a free class, then ask for the balance back
                let x = rng.gen_range(0..n_pad);
                let from = e.color[x];
                let targets: Vec<usize> =
                    (0..l).filter(|&c| c != from && e.at(x, c) == 0).collect();
                if targets.is_empty() {
                    continue;
                }
                let to = targets[rng.gen_range(0..targets.len())];
                e.recolor(x, to);
                e.work = 0;
                assert!(
                    e.balance(from, to, &vec![true; l], 0).is_ok(),
                    "seed {seed}"
                );
                e.log.clear();
                assert!(
                    e.members.iter().all(|m| m.len() == n_pad / l),
                    "seed {seed}"
                );
                assert!((0..n_pad).all(|v| e.at(v, e.color[v]) == 0), "seed {seed}");
            }
        }
    }
}
