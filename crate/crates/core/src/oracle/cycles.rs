use super::{Budget, Meter, OracleError, SearchOutcome};
use crate::finders::CycleWitness;
use crate::graph::{OrientedGraph, VertexSet};
use crate::walks::{CyclePattern, Step};

/// `layers[r]` holds the vertices of `allowed` from which some walk of
/// exactly `r` steps inside `allowed` ends at the anchor. `step` maps a layer
/// to the set one step further from the anchor.
fn backward_layers<F>(anchor: usize, depth: usize, allowed: &VertexSet, mut step: F) -> Vec<VertexSet>
where
    F: FnMut(usize, &VertexSet) -> VertexSet,
{
    let mut layers = Vec::with_capacity(depth + 1);
    layers.push(VertexSet::from_vertices(allowed.universe(), [anchor]));
    for r in 1..=depth {
        let mut next = step(r, &layers[r - 1]);
        next.intersect_with(allowed);
        layers.push(next);
    }
    layers
}

struct CycleSearch<'a> {
    g: &'a OrientedGraph,
    ell: usize,
    start: usize,
    layers: Vec<VertexSet>,
    path: Vec<usize>,
    used: VertexSet,
    meter: &'a Meter,
}

impl CycleSearch<'_> {
    /// `Some(true)` found, `Some(false)` exhausted, `None` budget spent.
    fn extend(&mut self) -> Option<bool> {
        let depth = self.path.len() - 1;
        let v = *self.path.last().unwrap();
        if depth + 1 == self.ell {
            return Some(self.g.has_edge(v, self.start));
        }
        let mut next = self.g.out_neighbors(v).intersection(&self.layers[self.ell - depth - 1]);
        next.difference_with(&self.used);
        for w in next.iter() {
            if !self.meter.tick() {
                return None;
            }
            self.path.push(w);
            self.used.insert(w);
            if self.extend()? {
                return Some(true);
            }
            self.used.remove(w);
            self.path.pop();
        }
        Some(false)
    }
}

fn cycle_from(
    g: &OrientedGraph,
    start: usize,
    ell: usize,
    allowed: &VertexSet,
    meter: &Meter,
) -> Option<Option<Vec<usize>>> {
    let layers = backward_layers(start, ell, allowed, |_, layer| g.in_neighborhood_of(layer));
    if !layers[ell].contains(start) {
        return Some(None);
    }
    let mut search = CycleSearch {
        g,
        ell,
        start,
        layers,
        path: vec![start],
        used: VertexSet::from_vertices(g.order(), [start]),
        meter,
    };
    match search.extend()? {
        true => Some(Some(search.path)),
        false => Some(None),
    }
}

/// Exact search for a directed cycle on exactly `ell` distinct vertices,
/// through `through` when given.
///
/// Each partial path is pruned against the set of vertices that still have a
/// walk of the remaining length back to the start, so the search stops early
/// on graphs with no closed walk of that length at all. Without `through`,
/// start `s` only explores vertices `≥ s`, so each cycle is met once from its
/// minimum vertex.
pub fn has_cycle_exact(
    g: &OrientedGraph,
    ell: usize,
    through: Option<usize>,
    budget: Budget,
) -> Result<SearchOutcome<CycleWitness>, OracleError> {
    let n = g.order();
    if ell < 2 {
        return Err(OracleError::BadLength(ell));
    }
    if let Some(t) = through {
        if t >= n {
            return Err(OracleError::OutOfRange { vertex: t, n });
        }
    }
    if ell > n {
        return Ok(SearchOutcome::Absent);
    }
    let meter = budget.meter();
    let outcome = match through {
        Some(t) => match cycle_from(g, t, ell, &g.vertex_set(), &meter) {
            None => SearchOutcome::BudgetExceeded,
            Some(None) => SearchOutcome::Absent,
            Some(Some(cycle)) => SearchOutcome::Found(cycle),
        },
        None => {
            let mut allowed = g.vertex_set();
            let mut outcome = SearchOutcome::Absent;
            for s in 0..n {
                if n - s < ell {
                    break;
                }
                match cycle_from(g, s, ell, &allowed, &meter) {
                    None => {
                        outcome = SearchOutcome::BudgetExceeded;
                        break;
                    }
                    Some(Some(cycle)) => {
                        outcome = SearchOutcome::Found(cycle);
                        break;
                    }
                    Some(None) => allowed.remove(s),
                }
            }
            outcome
        }
    };
    Ok(outcome.map(|vertices| CycleWitness { vertices, through }))
}

struct PatternSearch<'a> {
    g: &'a OrientedGraph,
    steps: &'a [Step],
    layers: Vec<VertexSet>,
    map: Vec<usize>,
    used: VertexSet,
    meter: &'a Meter,
}

impl PatternSearch<'_> {
    fn extend(&mut self) -> Option<bool> {
        let ell = self.steps.len();
        let i = self.map.len() - 1;
        let v = self.map[i];
        if i + 1 == ell {
            let s = self.map[0];
            return Some(match self.steps[i] {
                Step::F => self.g.has_edge(v, s),
                Step::B => self.g.has_edge(s, v),
            });
        }
        let nbrs = match self.steps[i] {
            Step::F => self.g.out_neighbors(v),
            Step::B => self.g.in_neighbors(v),
        };
        let mut next = nbrs.intersection(&self.layers[ell - i - 1]);
        next.difference_with(&self.used);
        for w in next.iter() {
            if !self.meter.tick() {
                return None;
            }
            self.map.push(w);
            self.used.insert(w);
            if self.extend()? {
                return Some(true);
            }
            self.used.remove(w);
            self.map.pop();
        }
        Some(false)
    }
}

/// Exact search for an injective copy of the oriented cycle `pattern`:
/// position `i` maps to `map[i]`, and letter `i` relates `map[i]` and
/// `map[i + 1 mod ℓ]` forwards (`f`) or backwards (`b`).
pub fn contains_pattern(
    g: &OrientedGraph,
    pattern: &CyclePattern,
    budget: Budget,
) -> SearchOutcome<Vec<usize>> {
    let steps = pattern.steps();
    let ell = steps.len();
    if ell > g.order() {
        return SearchOutcome::Absent;
    }
    let meter = budget.meter();
    let all = g.vertex_set();
    for s in 0..g.order() {
        let layers = backward_layers(s, ell, &all, |r, layer| match steps[ell - r] {
            Step::F => g.in_neighborhood_of(layer),
            Step::B => g.out_neighborhood_of(layer),
        });
        if !layers[ell].contains(s) {
            continue;
        }
        let mut search = PatternSearch {
            g,
            steps,
            layers,
            map: vec![s],
            used: VertexSet::from_vertices(g.order(), [s]),
            meter: &meter,
        };
        match search.extend() {
            None => return SearchOutcome::BudgetExceeded,
            Some(true) => return SearchOutcome::Found(search.map),
            Some(false) => {}
        }
    }
    SearchOutcome::Absent
}

/// Directed girth; `None` when the graph is acyclic.
pub fn shortest_cycle(g: &OrientedGraph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for v in 0..g.order() {
        let dist = g.bfs_distances(v);
        for u in g.in_neighbors(v).iter() {
            if let Some(d) = dist[u] {
                best = Some(best.map_or(d + 1, |b| b.min(d + 1)));
            }
        }
    }
    best
}
