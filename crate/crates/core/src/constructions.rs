//! Generators for the concrete graph families: cycle blow-ups and their
//! variants, rotational tournaments, the butterfly gadget, complete bipartite
//! digraphs and seeded random instances with a guaranteed minimum semidegree.

use std::ops::Range;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::{Mode, OrientedGraph};
use crate::rng::{task_rng, TaskRng};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("rotational tournaments need an odd order, got {0}")]
    EvenOrder(usize),
    #[error("no oriented graph on {n} vertices has minimum semidegree {required}")]
    Infeasible { n: usize, required: usize },
}

fn bad(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::BadParams(msg.into())
}

/// Partition of `n` vertices into `k` contiguous classes of sizes differing by
/// at most one, the larger classes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    k: usize,
    n: usize,
    class_sizes: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(k: usize, n: usize) -> Result<Self, ConstructionError> {
        if k < 3 {
            return Err(bad(format!("blow-up needs a cycle of length >= 3, got {k}")));
        }
        if n < k {
            return Err(bad(format!("blow-up of a {k}-cycle needs at least {k} vertices, got {n}")));
        }
        let class_sizes = (0..k).map(|i| n / k + usize::from(i < n % k)).collect();
        Ok(BlowupSpec { k, n, class_sizes })
    }

    /// Arbitrary class sizes, each at least one.
    pub fn from_class_sizes(class_sizes: &[usize]) -> Result<Self, ConstructionError> {
        if class_sizes.len() < 3 || class_sizes.contains(&0) {
            return Err(bad("need at least three non-empty classes"));
        }
        Ok(BlowupSpec {
            k: class_sizes.len(),
            n: class_sizes.iter().sum(),
            class_sizes: class_sizes.to_vec(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn class_range(&self, class: usize) -> Range<usize> {
        let start: usize = self.class_sizes[..class].iter().sum();
        start..start + self.class_sizes[class]
    }

    pub fn class_of(&self, v: usize) -> usize {
        let mut end = 0;
        for (i, size) in self.class_sizes.iter().enumerate() {
            end += size;
            if v < end {
                return i;
            }
        }
        panic!("vertex {v} outside a blow-up on {} vertices", self.n);
    }

    pub fn build(&self) -> OrientedGraph {
        let class: Vec<usize> = (0..self.n).map(|v| self.class_of(v)).collect();
        let k = self.k;
        OrientedGraph::from_fn(self.n, Mode::Oriented, |u, v| (class[u] + 1) % k == class[v])
    }
}

/// Blow-up of a directed `k`-cycle on `n` vertices: all edges from class `i`
/// to class `i + 1 (mod k)` and nothing else.
pub fn blowup_cycle(k: usize, n: usize) -> Result<OrientedGraph, ConstructionError> {
    Ok(BlowupSpec::new(k, n)?.build())
}

/// Blow-up of a 3-cycle with one vertex of the largest class replaced by a
/// vertex `u` with `N⁺(u) = V₂` and `N⁻(u) = V₁`.
#[derive(Clone, Debug)]
pub struct BypassBlowup {
    pub graph: OrientedGraph,
    pub bypass: usize,
    /// Sizes of `V₁, V₂, V₃` after the deletion, `u` excluded.
    pub class_sizes: [usize; 3],
}

impl BypassBlowup {
    /// `original_sizes` are the classes before a vertex of the largest one is
    /// deleted; the first largest class loses the vertex.
    pub fn from_class_sizes(original_sizes: [usize; 3]) -> Result<Self, ConstructionError> {
        let mut sizes = original_sizes;
        let largest = (0..3).max_by_key(|&i| (sizes[i], usize::MAX - i)).unwrap();
        if sizes[largest] < 2 || sizes.contains(&0) {
            return Err(bad("every class must stay non-empty after the deletion"));
        }
        sizes[largest] -= 1;
        let spec = BlowupSpec::from_class_sizes(&sizes)?;
        let base = spec.build();
        let bypass = spec.order();
        let mut edges: Vec<(usize, usize)> = base.edges().collect();
        edges.extend(spec.class_range(1).map(|v| (bypass, v)));
        edges.extend(spec.class_range(0).map(|v| (v, bypass)));
        let graph = OrientedGraph::from_edge_list(bypass + 1, &edges, Mode::Oriented)
            .expect("bypass blow-up is oriented");
        Ok(BypassBlowup { graph, bypass, class_sizes: sizes })
    }
}

/// The bypass construction on `n` vertices starting from the as-equal-as-possible
/// partition. Minimum semidegree is `⌊(n − 1)/3⌋` and every cycle through the
/// bypass vertex has length `≡ 1 (mod 3)`.
pub fn bypass_blowup(n: usize) -> Result<BypassBlowup, ConstructionError> {
    if n < 4 {
        return Err(bad(format!("bypass blow-up needs at least 4 vertices, got {n}")));
    }
    let spec = BlowupSpec::new(3, n)?;
    let s = spec.class_sizes();
    BypassBlowup::from_class_sizes([s[0], s[1], s[2]])
}

/// Order-`5m − 1` graph with `δ⁰ = 2m − 1 = ⌊2n/5⌋` and a vertex on no 3-cycle.
#[derive(Clone, Debug)]
pub struct ThreeCycleExtremal {
    pub graph: OrientedGraph,
    pub u: usize,
    pub a: Range<usize>,
    pub b: Range<usize>,
    pub c: Range<usize>,
}

pub fn extremal_3cycle_vertex(m: usize) -> Result<ThreeCycleExtremal, ConstructionError> {
    if m < 2 {
        return Err(bad(format!("m must be at least 2, got {m}")));
    }
    let side = 2 * m - 1;
    let a = 0..side;
    let b = side..2 * side;
    let c = 2 * side..2 * side + m;
    let u = c.end;
    let half = (side - 1) / 2;
    let beats_in_tournament = |i: usize, j: usize| (j + side - i) % side <= half;
    let graph = OrientedGraph::from_fn(u + 1, Mode::Oriented, |p, q| {
        let within = |r: &Range<usize>| r.contains(&p) && r.contains(&q);
        if within(&a) || within(&b) {
            let base = if a.contains(&p) { a.start } else { b.start };
            beats_in_tournament(p - base, q - base)
        } else if p == u {
            b.contains(&q)
        } else if q == u {
            a.contains(&p)
        } else {
            (a.contains(&p) && b.contains(&q))
                || (b.contains(&p) && c.contains(&q))
                || (c.contains(&p) && a.contains(&q))
        }
    });
    Ok(ThreeCycleExtremal { graph, u, a, b, c })
}

/// Vertex `i` beats `i + 1, …, i + (n − 1)/2 (mod n)`.
pub fn rotational_tournament(n: usize) -> Result<OrientedGraph, ConstructionError> {
    if n % 2 == 0 {
        return Err(ConstructionError::EvenOrder(n));
    }
    if n < 3 {
        return Err(bad(format!("rotational tournament needs n >= 3, got {n}")));
    }
    let half = (n - 1) / 2;
    Ok(OrientedGraph::from_fn(n, Mode::Oriented, |u, v| (v + n - u) % n <= half))
}

/// Labels of the butterfly gadget vertices.
pub const BUTTERFLY_X: usize = 0;
pub const BUTTERFLY_A: usize = 1;
pub const BUTTERFLY_Z: usize = 2;
pub const BUTTERFLY_B: usize = 3;
pub const BUTTERFLY_Y: usize = 4;

/// The five-vertex `xy`-butterfly with edges `xa, xz, az, zb, zy, by`, labelled
/// `(x, a, z, b, y) = (0, 1, 2, 3, 4)`.
pub fn butterfly_gadget() -> OrientedGraph {
    let (x, a, z, b, y) = (BUTTERFLY_X, BUTTERFLY_A, BUTTERFLY_Z, BUTTERFLY_B, BUTTERFLY_Y);
    OrientedGraph::from_edge_list(5, &[(x, a), (x, z), (a, z), (z, b), (z, y), (b, y)], Mode::Oriented)
        .expect("gadget is oriented")
}

/// Complete bipartite digraph with classes of sizes `⌈n/2⌉` and `⌊n/2⌋` and
/// both directions present across the classes.
pub fn complete_bipartite_digraph(n: usize) -> Result<OrientedGraph, ConstructionError> {
    if n < 2 {
        return Err(bad(format!("complete bipartite digraph needs n >= 2, got {n}")));
    }
    let first = n.div_ceil(2);
    Ok(OrientedGraph::from_fn(n, Mode::Digraph, |u, v| (u < first) != (v < first)))
}

/// Seeded random oriented graph with `δ⁰ ≥ ⌈target_semi · n⌉`.
pub fn random_degree_conditioned(
    n: usize,
    target_semi: f64,
    seed: u64,
) -> Result<OrientedGraph, ConstructionError> {
    if !(target_semi > 0.0 && target_semi <= 0.5) {
        return Err(bad(format!("target semidegree fraction must lie in (0, 1/2], got {target_semi}")));
    }
    let required = (target_semi * n as f64 - 1e-9).ceil().max(0.0) as usize;
    random_min_semidegree(n, required, seed)
}

/// Seeded random oriented graph with `δ⁰ ≥ d`.
///
/// A backbone (a random circulant, or a blow-up of a short cycle whose degree
/// deficit is repaired with extra edges) is relabelled at random, padded with
/// random edges, then perturbed by deletions and reversals that never push a
/// degree below `d`.
pub fn random_min_semidegree(n: usize, d: usize, seed: u64) -> Result<OrientedGraph, ConstructionError> {
    let cap = n.saturating_sub(1) / 2;
    if d > cap {
        return Err(ConstructionError::Infeasible { n, required: d });
    }
    let mut rng = task_rng(seed, 0);
    let mut builder = None;
    if n >= 3 && rng.gen_bool(0.5) {
        let k = rng.gen_range(3..=n.min(5));
        builder = Builder::blowup_backbone(n, k, &mut rng).repair(d, &mut rng);
    }
    let mut b = builder.unwrap_or_else(|| Builder::circulant_backbone(n, d, &mut rng));
    b.augment(&mut rng);
    b.perturb(d, &mut rng);
    let g = b.finish();
    debug_assert!(g.min_semidegree() >= d);
    Ok(g)
}

struct Builder {
    adj: Vec<Vec<bool>>,
    out_deg: Vec<usize>,
    in_deg: Vec<usize>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { adj: vec![vec![false; n]; n], out_deg: vec![0; n], in_deg: vec![0; n] }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v] || self.adj[v][u]
    }

    fn add(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.adjacent(u, v));
        self.adj[u][v] = true;
        self.out_deg[u] += 1;
        self.in_deg[v] += 1;
    }

    fn remove(&mut self, u: usize, v: usize) {
        debug_assert!(self.adj[u][v]);
        self.adj[u][v] = false;
        self.out_deg[u] -= 1;
        self.in_deg[v] -= 1;
    }

    fn shuffled(n: usize, rng: &mut TaskRng) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        perm
    }

    fn circulant_backbone(n: usize, d: usize, rng: &mut TaskRng) -> Self {
        let mut b = Builder::new(n);
        let perm = Self::shuffled(n, rng);
        let mut offsets: Vec<usize> = (1..=n.saturating_sub(1) / 2).collect();
        offsets.shuffle(rng);
        for &s in offsets.iter().take(d) {
            let step = if rng.gen_bool(0.5) { s } else { n - s };
            for i in 0..n {
                b.add(perm[i], perm[(i + step) % n]);
            }
        }
        b
    }

    fn blowup_backbone(n: usize, k: usize, rng: &mut TaskRng) -> Self {
        let mut b = Builder::new(n);
        let perm = Self::shuffled(n, rng);
        let spec = BlowupSpec::new(k, n).expect("n >= k checked by caller");
        let g = spec.build();
        for (u, v) in g.edges() {
            b.add(perm[u], perm[v]);
        }
        b
    }

    /// Adds edges at deficient vertices until `δ⁰ ≥ d`; `None` if some vertex
    /// runs out of non-adjacent partners.
    fn repair(mut self, d: usize, rng: &mut TaskRng) -> Option<Self> {
        let n = self.n();
        for v in Self::shuffled(n, rng) {
            while self.out_deg[v] < d {
                let free: Vec<usize> = (0..n).filter(|&w| w != v && !self.adjacent(v, w)).collect();
                let &w = free.choose(rng)?;
                self.add(v, w);
            }
            while self.in_deg[v] < d {
                let free: Vec<usize> = (0..n).filter(|&w| w != v && !self.adjacent(v, w)).collect();
                let &w = free.choose(rng)?;
                self.add(w, v);
            }
        }
        Some(self)
    }

    fn augment(&mut self, rng: &mut TaskRng) {
        let n = self.n();
        let p = rng.gen_range(0.0..0.25);
        for u in 0..n {
            for v in u + 1..n {
                if !self.adjacent(u, v) && rng.gen_bool(p) {
                    if rng.gen_bool(0.5) {
                        self.add(u, v);
                    } else {
                        self.add(v, u);
                    }
                }
            }
        }
    }

    fn perturb(&mut self, d: usize, rng: &mut TaskRng) {
        let n = self.n();
        if n < 2 {
            return;
        }
        for _ in 0..4 * n {
            let u = rng.gen_range(0..n);
            if self.out_deg[u] <= d {
                continue;
            }
            let movable: Vec<usize> =
                (0..n).filter(|&v| self.adj[u][v] && self.in_deg[v] > d).collect();
            let Some(&v) = movable.choose(rng) else { continue };
            self.remove(u, v);
            if rng.gen_bool(0.5) {
                self.add(v, u);
            }
        }
    }

    fn finish(self) -> OrientedGraph {
        let adj = self.adj;
        OrientedGraph::from_fn(adj.len(), Mode::Oriented, |u, v| adj[u][v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blowup_class_sizes_and_degrees() {
        let spec = BlowupSpec::new(3, 10).unwrap();
        assert_eq!(spec.class_sizes(), &[4, 3, 3]);
        assert_eq!(spec.class_range(1), 4..7);
        assert_eq!(spec.class_of(9), 2);
        let g = spec.build();
        assert_eq!(g.min_semidegree(), 3);
        let g9 = blowup_cycle(3, 9).unwrap();
        assert_eq!(g9.min_semidegree(), 3);
        assert_eq!(g9.edge_count(), 27);
        assert!(blowup_cycle(2, 9).is_err());
        assert!(blowup_cycle(4, 3).is_err());
    }

    #[test]
    fn blowup_edges_advance_class_index() {
        for (k, n) in [(3, 11), (4, 8), (5, 17)] {
            let spec = BlowupSpec::new(k, n).unwrap();
            let g = spec.build();
            assert_eq!(g.min_semidegree(), n / k);
            for (u, v) in g.edges() {
                assert_eq!((spec.class_of(u) + 1) % k, spec.class_of(v));
            }
        }
    }

    #[test]
    fn bypass_blowup_degrees() {
        for n in 4..20 {
            let b = bypass_blowup(n).unwrap();
            assert_eq!(b.graph.order(), n);
            assert_eq!(b.graph.min_semidegree(), (n - 1) / 3, "n = {n}");
            assert_eq!(b.graph.out_degree(b.bypass), b.class_sizes[1]);
            assert_eq!(b.graph.in_degree(b.bypass), b.class_sizes[0]);
        }
        assert!(bypass_blowup(3).is_err());
    }

    #[test]
    fn extremal_three_cycle_degrees() {
        for m in 2..=5 {
            let e = extremal_3cycle_vertex(m).unwrap();
            let n = 5 * m - 1;
            assert_eq!(e.graph.order(), n);
            assert_eq!(e.graph.min_semidegree(), 2 * m - 1);
            assert_eq!(e.graph.min_semidegree(), 2 * n / 5);
            assert_eq!(e.graph.out_neighbors(e.u).to_vec(), e.b.clone().collect::<Vec<_>>());
            assert_eq!(e.graph.in_neighbors(e.u).to_vec(), e.a.clone().collect::<Vec<_>>());
            for p in e.b.clone() {
                for q in e.a.clone() {
                    assert!(!e.graph.has_edge(p, q));
                }
            }
        }
        let e = extremal_3cycle_vertex(2).unwrap();
        let c = e.c.start;
        assert_eq!((e.graph.out_degree(c), e.graph.in_degree(c)), (3, 3));
        assert!(extremal_3cycle_vertex(1).is_err());
    }

    #[test]
    fn rotational_tournaments_are_regular() {
        for n in [3, 5, 7, 11] {
            let g = rotational_tournament(n).unwrap();
            for v in 0..n {
                assert_eq!(g.out_degree(v), (n - 1) / 2);
                assert_eq!(g.in_degree(v), (n - 1) / 2);
            }
            assert_eq!(g.edge_count(), n * (n - 1) / 2);
        }
        let r3 = rotational_tournament(3).unwrap();
        assert_eq!(r3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(rotational_tournament(4), Err(ConstructionError::EvenOrder(4)));
    }

    #[test]
    fn butterfly_has_three_path_lengths() {
        let g = butterfly_gadget();
        assert_eq!(g.edge_count(), 6);
        for path in [vec![0, 2, 4], vec![0, 1, 2, 4], vec![0, 1, 2, 3, 4]] {
            assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])), "{path:?}");
        }
    }

    #[test]
    fn bipartite_digraph() {
        let g = complete_bipartite_digraph(5).unwrap();
        assert_eq!(g.mode(), Mode::Digraph);
        assert_eq!(g.min_semidegree(), 2);
        assert_eq!(complete_bipartite_digraph(4).unwrap().min_semidegree(), 2);
        assert_eq!(g.edge_count(), 2 * 3 * 2);
    }

    #[test]
    fn random_instances_meet_degree_target() {
        let g = random_degree_conditioned(60, 0.37, 1).unwrap();
        assert!(g.min_semidegree() >= 22);
        let g = random_degree_conditioned(9, 1.0 / 3.0, 7).unwrap();
        assert!(g.min_semidegree() >= 3);
        assert!(matches!(
            random_degree_conditioned(10, 0.5, 1),
            Err(ConstructionError::Infeasible { .. })
        ));
        assert!(matches!(random_degree_conditioned(10, 0.51, 1), Err(ConstructionError::BadParams(_))));
        for seed in 0..40 {
            let n = 7 + seed as usize % 20;
            let d = n / 3 + 1;
            let g = random_min_semidegree(n, d, seed).unwrap();
            assert!(g.min_semidegree() >= d);
            assert!(g.check_invariants().is_ok());
        }
    }

    #[test]
    fn random_instances_are_deterministic() {
        let a = random_min_semidegree(30, 11, 99).unwrap();
        let b = random_min_semidegree(30, 11, 99).unwrap();
        assert_eq!(a, b);
        let c = random_min_semidegree(30, 11, 100).unwrap();
        assert_ne!(a, c);
    }
}
