use serde::{Deserialize, Serialize};

use super::butterfly::{find_6cycle_through, Butterfly};
use super::short::{find_3cycle_through, find_4cycle_through, find_5cycle_through};
use super::{
    check_oriented, check_vertex, finish_cycle, third_plus_one, validate_path, Branch, CycleWitness,
    FinderError, FinderOptions, FinderReport, FinderTrace,
};
use crate::graph::{OrientedGraph, VertexSet};

/// Constants of the connecting-path argument. They are reported, not used:
/// the argument only applies once `n ≥ 8·10⁹·C`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathConstants {
    pub epsilon: f64,
    pub c: u64,
    pub c_prime: f64,
    pub min_order: f64,
}

impl PathConstants {
    pub fn new(c: u64) -> Self {
        let epsilon = 1e-4;
        PathConstants { epsilon, c, c_prime: 10.0 * c as f64 / epsilon, min_order: 8e9 * c as f64 }
    }
}

struct PathSearch<'a> {
    g: &'a OrientedGraph,
    layers: Vec<VertexSet>,
    path: Vec<usize>,
    used: VertexSet,
    target: usize,
    len: usize,
}

impl PathSearch<'_> {
    fn extend(&mut self) -> bool {
        let v = *self.path.last().unwrap();
        let steps_left = self.len - (self.path.len() - 1);
        if steps_left == 1 {
            return self.g.has_edge(v, self.target);
        }
        let mut next = self.g.out_neighbors(v).intersection(&self.layers[steps_left - 1]);
        next.difference_with(&self.used);
        for w in next.iter() {
            self.path.push(w);
            self.used.insert(w);
            if self.extend() {
                return true;
            }
            self.used.remove(w);
            self.path.pop();
        }
        false
    }
}

/// Shortest-first search for an `x`–`y` path of length exactly `len` whose
/// interior lies in `allowed`.
fn path_of_length(
    g: &OrientedGraph,
    x: usize,
    y: usize,
    len: usize,
    allowed: &VertexSet,
) -> Option<Vec<usize>> {
    let mut layers = vec![VertexSet::from_vertices(g.order(), [y])];
    for r in 1..len {
        let mut next = g.in_neighborhood_of(&layers[r - 1]);
        next.intersect_with(allowed);
        layers.push(next);
    }
    let mut search = PathSearch {
        g,
        layers,
        path: vec![x],
        used: VertexSet::from_vertices(g.order(), [x, y]),
        target: y,
        len,
    };
    if search.extend() {
        search.path.push(y);
        Some(search.path)
    } else {
        None
    }
}

fn path_345_traced(
    g: &OrientedGraph,
    x: usize,
    y: usize,
    avoid: &VertexSet,
    c: u64,
    trace: &mut FinderTrace,
) -> Option<Vec<usize>> {
    let mut allowed = avoid.complement();
    allowed.intersect_with(&g.vertex_set());
    allowed.remove(x);
    allowed.remove(y);
    trace.record("X", &g.out_neighbors(x).intersection(&allowed));
    trace.record("Y", &g.in_neighbors(y).intersection(&allowed));
    trace.constants = Some(PathConstants::new(c));
    for (len, branch) in [(3, Branch::PathLength3), (4, Branch::PathLength4), (5, Branch::PathLength5)] {
        if let Some(path) = path_of_length(g, x, y, len, &allowed) {
            trace.branch = Some(branch);
            debug_assert!(validate_path(g, &path).is_ok());
            return Some(path);
        }
    }
    trace.fail("no x-y path of length 3, 4 or 5 with interior outside the avoided set")
}

fn path_hypotheses(g: &OrientedGraph, c: u64) -> FinderTrace {
    let n = g.order();
    let degree = 3 * g.min_semidegree() as u64 + 3 * c >= n as u64 + 3;
    FinderTrace::new(degree, n as f64 >= PathConstants::new(c).min_order)
}

/// Directed `x`–`y` path of length 3, 4 or 5 whose interior avoids `avoid`.
///
/// The search is exhaustive over those three lengths, shortest first, so a
/// missing witness means no such path exists.
pub fn find_path_345(
    g: &OrientedGraph,
    x: usize,
    y: usize,
    avoid: &VertexSet,
) -> Result<FinderReport<Vec<usize>>, FinderError> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if x == y {
        return Err(FinderError::SameEndpoints);
    }
    for v in [x, y] {
        if avoid.contains(v) {
            return Err(FinderError::EndpointAvoided(v));
        }
    }
    let mut trace = path_hypotheses(g, 1);
    let witness = path_345_traced(g, x, y, avoid, 1, &mut trace);
    Ok(FinderReport { witness, trace })
}

/// `ℓ`-cycle through `x`. Lengths 3 to 6 go to the dedicated finders.
///
/// For `ℓ ≥ 7`: an `xy`-butterfly, then a path `P` of length `ℓ − 7` from `y`
/// avoiding `a, b, x, z` grown greedily towards the unused vertex with the
/// most unused out-neighbours, then a `v`–`x` path of length `s ∈ {3, 4, 5}`
/// from the end `v` of `P` avoiding `a, b, z` and the rest of `P`. The
/// butterfly path of length `7 − s` closes the cycle.
pub fn find_lcycle_through(
    g: &OrientedGraph,
    x: usize,
    ell: usize,
    opts: &FinderOptions,
) -> Result<FinderReport<CycleWitness>, FinderError> {
    check_oriented(g, x)?;
    let dispatched = match ell {
        0..=2 => return Err(FinderError::BadLength(ell)),
        3 => Some(find_3cycle_through(g, x, opts)?),
        4 => Some(find_4cycle_through(g, x, opts)?),
        5 => Some(find_5cycle_through(g, x, opts)?),
        6 => Some(find_6cycle_through(g, x, opts)?),
        _ => None,
    };
    if let Some(mut report) = dispatched {
        if report.trace.branch.is_none() {
            report.trace.branch = Some(Branch::Dispatched { ell });
        }
        return Ok(report);
    }
    let n = g.order();
    let mut trace = FinderTrace::new(third_plus_one(g), n as f64 >= 1e10 * ell as f64);
    let proof = long_cycle_proof(g, x, ell, &mut trace);
    Ok(finish_cycle(g, x, ell, proof, trace, opts))
}

fn long_cycle_proof(
    g: &OrientedGraph,
    x: usize,
    ell: usize,
    trace: &mut FinderTrace,
) -> Option<Vec<usize>> {
    let bf = super::butterfly::find_butterfly(g, x).ok()?.witness;
    let Some(bf) = bf else {
        return trace.fail("no butterfly at x");
    };
    trace.butterfly = Some(bf);
    let Butterfly { a, z, b, y, .. } = bf;

    let mut used = VertexSet::from_vertices(g.order(), [a, b, x, z, y]);
    let mut path = vec![y];
    for _ in 0..ell - 7 {
        let cur = *path.last().unwrap();
        let next = g
            .out_neighbors(cur)
            .difference(&used)
            .iter()
            .max_by_key(|&w| (g.out_neighbors(w).difference(&used).len(), std::cmp::Reverse(w)));
        let Some(w) = next else {
            return trace.fail("greedy path from y got stuck");
        };
        used.insert(w);
        path.push(w);
    }
    let v = *path.last().unwrap();
    let p_set = VertexSet::from_vertices(g.order(), path.iter().copied());
    trace.record("P", &p_set);

    let mut avoid = VertexSet::from_vertices(g.order(), [a, b, z]);
    avoid.union_with(&p_set);
    avoid.remove(v);
    let Some(back) = path_345_traced(g, v, x, &avoid, ell as u64, trace) else {
        return trace.fail("no return path of length 3, 4 or 5 from the end of P to x");
    };
    let s = back.len() - 1;
    trace.branch = Some(Branch::LongCycle { return_length: s });
    let mut cycle = bf.path(7 - s)?;
    cycle.extend_from_slice(&path[1..]);
    cycle.extend_from_slice(&back[1..back.len() - 1]);
    Some(cycle)
}
