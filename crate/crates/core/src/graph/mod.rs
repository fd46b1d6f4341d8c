//! Directed graphs with the oriented-graph invariant, plus the neighbourhood
//! and distance queries every finder leans on.
//!
//! Vertices are `0..n`. Out- and in-neighbourhoods are both stored as
//! bitsets so that `N⁺(v) ∩ N⁻(w)` style intersections are word operations.

mod io;
mod vertex_set;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use io::{parse_edge_list, to_dot, write_edge_list, ParseError};
pub use vertex_set::VertexSet;

/// Whether antiparallel pairs `uv`, `vu` are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Oriented,
    Digraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("edges {0}->{1} and {1}->{0} both present in an oriented graph")]
    AntiparallelViolation(usize, usize),
    #[error("edge {0}->{1} given twice")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("in- and out-adjacency disagree on edge {0}->{1}")]
    InconsistentAdjacency(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub min_out: usize,
    pub min_in: usize,
    pub min_semi: usize,
}

/// A loop-free digraph; in [`Mode::Oriented`] at most one edge joins any pair.
///
/// The graph is immutable once built. `labels[v]` is the label `v` carried in
/// the graph it was cut out of, so witnesses found after deletions can be
/// reported in original terms.
#[derive(Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    mode: Mode,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
    labels: Vec<usize>,
}

impl OrientedGraph {
    pub fn empty(n: usize, mode: Mode) -> Self {
        OrientedGraph {
            mode,
            out_adj: vec![VertexSet::new(n); n],
            in_adj: vec![VertexSet::new(n); n],
            labels: (0..n).collect(),
        }
    }

    pub fn from_edge_list(
        n: usize,
        edges: &[(usize, usize)],
        mode: Mode,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n, mode);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds from a closure deciding each ordered pair; used by generators
    /// whose edge rule is a formula.
    pub(crate) fn from_fn<F>(n: usize, mode: Mode, mut has_edge: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut g = Self::empty(n, mode);
        for u in 0..n {
            for v in 0..n {
                if u != v && has_edge(u, v) {
                    g.out_adj[u].insert(v);
                    g.in_adj[v].insert(u);
                }
            }
        }
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        if self.out_adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        if self.mode == Mode::Oriented && self.out_adj[v].contains(u) {
            return Err(GraphError::AntiparallelViolation(u, v));
        }
        self.out_adj[u].insert(v);
        self.in_adj[v].insert(u);
        Ok(())
    }

    /// Re-checks every structural invariant from scratch.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        let n = self.order();
        for u in 0..n {
            if self.out_adj[u].contains(u) {
                return Err(GraphError::LoopEdge(u));
            }
            for v in self.out_adj[u].iter() {
                if v >= n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
                if !self.in_adj[v].contains(u) {
                    return Err(GraphError::InconsistentAdjacency(u, v));
                }
                if self.mode == Mode::Oriented && self.out_adj[v].contains(u) {
                    return Err(GraphError::AntiparallelViolation(u, v));
                }
            }
        }
        for v in 0..n {
            if let Some(u) = self.in_adj[v].iter().find(|&u| !self.out_adj[u].contains(v)) {
                return Err(GraphError::InconsistentAdjacency(u, v));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.out_adj.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_oriented(&self) -> bool {
        self.mode == Mode::Oriented
    }

    pub fn edge_count(&self) -> usize {
        self.out_adj.iter().map(VertexSet::len).sum()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.out_adj[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    /// `d⁺_X(v)`: out-neighbours of `v` inside `set`.
    pub fn out_degree_within(&self, v: usize, set: &VertexSet) -> usize {
        self.out_adj[v].intersection_count(set)
    }

    /// `d⁻_X(v)`: in-neighbours of `v` inside `set`.
    pub fn in_degree_within(&self, v: usize, set: &VertexSet) -> usize {
        self.in_adj[v].intersection_count(set)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.order())
    }

    /// `N⁺(A)`: the union of out-neighbourhoods of members of `set`.
    pub fn out_neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in set.iter().filter(|&v| v < self.order()) {
            out.union_with(&self.out_adj[v]);
        }
        out
    }

    /// `N⁻(A)`.
    pub fn in_neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in set.iter().filter(|&v| v < self.order()) {
            out.union_with(&self.in_adj[v]);
        }
        out
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        if self.order() == 0 {
            return DegreeSummary { min_out: 0, min_in: 0, min_semi: 0 };
        }
        let min_out = self.out_adj.iter().map(VertexSet::len).min().unwrap_or(0);
        let min_in = self.in_adj.iter().map(VertexSet::len).min().unwrap_or(0);
        DegreeSummary { min_out, min_in, min_semi: min_out.min(min_in) }
    }

    pub fn min_semidegree(&self) -> usize {
        self.degree_summary().min_semi
    }

    /// `e(X)`: number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter()
            .filter(|&v| v < self.order())
            .map(|v| self.out_degree_within(v, set))
            .sum()
    }

    /// Label of `v` in the graph this one was derived from.
    pub fn original_label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    fn check_members(&self, set: &VertexSet) -> Result<(), GraphError> {
        let n = self.order();
        match set.iter().find(|&v| v >= n) {
            Some(vertex) => Err(GraphError::OutOfRange { vertex, n }),
            None => Ok(()),
        }
    }

    /// `G − A`, relabelled contiguously. Labels of the survivors are kept.
    pub fn induced_without(&self, removed: &VertexSet) -> Result<OrientedGraph, GraphError> {
        self.check_members(removed)?;
        let keep: Vec<usize> = (0..self.order()).filter(|&v| !removed.contains(v)).collect();
        let mut index = vec![usize::MAX; self.order()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let m = keep.len();
        let mut g = OrientedGraph::empty(m, self.mode);
        for (new_u, &old_u) in keep.iter().enumerate() {
            for old_v in self.out_adj[old_u].iter() {
                let new_v = index[old_v];
                if new_v != usize::MAX {
                    g.out_adj[new_u].insert(new_v);
                    g.in_adj[new_v].insert(new_u);
                }
            }
        }
        g.labels = keep.iter().map(|&old| self.labels[old]).collect();
        Ok(g)
    }

    /// `G[A]`.
    pub fn induced(&self, kept: &VertexSet) -> Result<OrientedGraph, GraphError> {
        self.check_members(kept)?;
        let mut removed = self.vertex_set();
        removed.difference_with(kept);
        self.induced_without(&removed)
    }

    /// The graph with every edge reversed. Labels are preserved.
    pub fn reversed(&self) -> OrientedGraph {
        OrientedGraph {
            mode: self.mode,
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Some edge with both ends in `set`, scanning tails then heads in
    /// increasing order; `None` iff `set` is independent.
    pub fn find_edge_within(&self, set: &VertexSet) -> Option<(usize, usize)> {
        set.iter()
            .filter(|&u| u < self.order())
            .find_map(|u| self.out_adj[u].intersection(set).first().map(|v| (u, v)))
    }

    /// A vertex of `set` with the fewest out-neighbours inside `set`, smallest
    /// index on ties. In an oriented graph its inside out-degree is at most
    /// `(|set| − 1) / 2`.
    pub fn low_outdegree_vertex(&self, set: &VertexSet) -> Result<usize, GraphError> {
        self.check_members(set)?;
        set.iter()
            .min_by_key(|&v| (self.out_degree_within(v, set), v))
            .ok_or(GraphError::EmptySet)
    }

    /// Like [`low_outdegree_vertex`](Self::low_outdegree_vertex) with edges reversed.
    pub fn low_indegree_vertex(&self, set: &VertexSet) -> Result<usize, GraphError> {
        self.check_members(set)?;
        set.iter()
            .min_by_key(|&v| (self.in_degree_within(v, set), v))
            .ok_or(GraphError::EmptySet)
    }

    /// Directed BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.out_adj[u].iter() {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Length of a shortest directed `x`–`y` path.
    pub fn distance(&self, x: usize, y: usize) -> Option<usize> {
        self.bfs_distances(x)[y]
    }

    /// Shortest directed path from `x` to `y` as a vertex list.
    pub fn shortest_path(&self, x: usize, y: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.order()];
        let mut seen = self.empty_set();
        let mut queue = VecDeque::new();
        seen.insert(x);
        queue.push_back(x);
        while let Some(u) = queue.pop_front() {
            if u == y {
                let mut path = vec![y];
                let mut cur = y;
                while cur != x {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for v in self.out_adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// Maximum distance over ordered pairs; `None` when some pair is
    /// unreachable (infinite diameter).
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for x in 0..self.order() {
            for d in self.bfs_distances(x) {
                best = best.max(d?);
            }
        }
        Some(best)
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrientedGraph")
            .field("n", &self.order())
            .field("mode", &self.mode)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
