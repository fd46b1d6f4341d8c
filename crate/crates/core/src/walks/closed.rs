use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::WalkError;
use crate::graph::OrientedGraph;
use crate::oracle::{closed_walk_witness, has_cycle_exact, Budget, SearchOutcome};

/// `ℓ = a(t+1) + r`: wind `r` times around a `(t+2)`-cycle and `a − r` times
/// around a `(t+1)`-cycle sharing a vertex with it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindingPlan {
    pub t: usize,
    pub a: usize,
    pub r: usize,
}

impl WindingPlan {
    pub fn short_len(&self) -> usize {
        self.t + 1
    }

    pub fn long_len(&self) -> usize {
        self.t + 2
    }

    pub fn total(&self) -> usize {
        self.r * self.long_len() + (self.a - self.r) * self.short_len()
    }
}

/// `a = ⌊ℓ/(t+1)⌋`, `r = ℓ − a(t+1)`; there is a plan iff `r ≤ a`.
pub fn winding_plan(ell: usize, t: usize) -> Result<WindingPlan, WalkError> {
    if t == 0 || ell < t + 1 {
        return Err(WalkError::BadParams(format!("need t >= 1 and ell >= t + 1, got ell = {ell}, t = {t}")));
    }
    let a = ell / (t + 1);
    let r = ell % (t + 1);
    if r > a {
        return Err(WalkError::NoPlan { ell, t });
    }
    Ok(WindingPlan { t, a, r })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WalkStrategy {
    /// A cycle of length `a | ℓ` traversed `ℓ/a` times.
    DivisorCycle { a: usize },
    /// Two cycles through a transitive triangle, wound per the plan.
    TriangleWinding { plan: WindingPlan },
    /// Read off the exact-step reachable sets.
    MatrixOracle,
}

/// Closed walk `v₀ v₁ … v_ℓ` with `v₀ = v_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedWalkWitness {
    pub vertices: Vec<usize>,
    pub strategy: WalkStrategy,
}

impl ClosedWalkWitness {
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_valid_in(&self, g: &OrientedGraph) -> bool {
        let vs = &self.vertices;
        vs.len() >= 2
            && vs.first() == vs.last()
            && vs.windows(2).all(|w| w[0] < g.order() && g.has_edge(w[0], w[1]))
    }
}

const DIVISOR_BUDGET: Budget = Budget::nodes(100_000);
const MAX_TRIANGLE_PATH: usize = 50;
const MAX_TRIANGLES: usize = 256;

/// A closed walk of length exactly `ell`, or `None` if there is none.
///
/// Rungs, in order: a cycle whose length divides `ell`, found by the exact
/// search under a small budget and wound round; a transitive triangle
/// `x → z, x → y, z → y` with a shortest `y`–`x` path `P` of length
/// `t ≤ 50` avoiding `z`, giving cycles `yPxy` and `yPxzy` wound per
/// [`winding_plan`]; finally the reachable-set oracle, which also certifies
/// absence.
pub fn closed_walk_of_length(g: &OrientedGraph, ell: usize) -> Result<Option<ClosedWalkWitness>, WalkError> {
    if ell < 2 {
        return Err(WalkError::BadParams(format!("closed walks need length >= 2, got {ell}")));
    }
    let smallest = if g.is_oriented() { 3 } else { 2 };
    for a in (smallest..=ell.min(g.order())).filter(|a| ell % a == 0) {
        if let SearchOutcome::Found(c) = has_cycle_exact(g, a, None, DIVISOR_BUDGET).expect("length >= 2") {
            let mut vertices: Vec<usize> = c.vertices.iter().copied().cycle().take(ell).collect();
            vertices.push(vertices[0]);
            return Ok(Some(ClosedWalkWitness { vertices, strategy: WalkStrategy::DivisorCycle { a } }));
        }
    }
    if let Some(w) = triangle_winding(g, ell) {
        return Ok(Some(w));
    }
    Ok(closed_walk_witness(g, ell).map(|vertices| ClosedWalkWitness { vertices, strategy: WalkStrategy::MatrixOracle }))
}

fn triangle_winding(g: &OrientedGraph, ell: usize) -> Option<ClosedWalkWitness> {
    let mut tried = 0;
    for x in 0..g.order() {
        let out_x = g.out_neighbors(x);
        for z in out_x.iter() {
            for y in g.out_neighbors(z).intersection(out_x).iter() {
                if tried == MAX_TRIANGLES {
                    return None;
                }
                tried += 1;
                let Some(path) = path_avoiding(g, y, x, z, MAX_TRIANGLE_PATH) else { continue };
                let t = path.len() - 1;
                let Ok(plan) = winding_plan(ell, t) else { continue };
                let mut vertices = Vec::with_capacity(ell + 1);
                for round in 0..plan.a {
                    vertices.extend_from_slice(&path);
                    if round < plan.r {
                        vertices.push(z);
                    }
                }
                vertices.push(y);
                let w = ClosedWalkWitness { vertices, strategy: WalkStrategy::TriangleWinding { plan } };
                debug_assert!(w.is_valid_in(g) && w.len() == ell);
                return Some(w);
            }
        }
    }
    None
}

/// Shortest `from`–`to` path of length at most `cap` in `G − avoid`.
fn path_avoiding(g: &OrientedGraph, from: usize, to: usize, avoid: usize, cap: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut queue = VecDeque::from([from]);
    depth[from] = 0;
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            while *path.last().unwrap() != from {
                path.push(parent[*path.last().unwrap()]);
            }
            path.reverse();
            return Some(path);
        }
        if depth[u] == cap {
            continue;
        }
        for v in g.out_neighbors(u).iter() {
            if v != avoid && depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blowup_cycle, rotational_tournament};
    use crate::graph::Mode;
    use crate::oracle::has_closed_walk;

    #[test]
    fn plans() {
        assert_eq!(winding_plan(42, 5), Ok(WindingPlan { t: 5, a: 7, r: 0 }));
        let p = winding_plan(23, 2).unwrap();
        assert_eq!((p.a, p.r), (7, 2));
        assert_eq!(p.total(), 23);
        assert_eq!(p.r * 4 + (p.a - p.r) * 3, 23);
        assert_eq!(winding_plan(9, 6), Err(WalkError::NoPlan { ell: 9, t: 6 }));
        assert!(matches!(winding_plan(3, 0), Err(WalkError::BadParams(_))));
    }

    #[test]
    fn triangle_wound_twice() {
        let g = OrientedGraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)], Mode::Oriented).unwrap();
        let w = closed_walk_of_length(&g, 6).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 0, 1, 2, 0]);
        assert_eq!(w.strategy, WalkStrategy::DivisorCycle { a: 3 });
    }

    #[test]
    fn blowup_has_only_multiples_of_three() {
        let g = blowup_cycle(3, 9).unwrap();
        assert_eq!(closed_walk_of_length(&g, 5).unwrap(), None);
        assert!(closed_walk_of_length(&g, 12).unwrap().unwrap().is_valid_in(&g));
    }

    #[test]
    fn rotational_long_walk_is_valid() {
        let g = rotational_tournament(7).unwrap();
        let w = closed_walk_of_length(&g, 23).unwrap().unwrap();
        assert!(w.is_valid_in(&g));
        assert_eq!(w.len(), 23);
    }

    #[test]
    fn triangle_rung_on_its_own() {
        // Transitive triangle 0→1, 0→2, 1→2 plus the return path 2→3→0.
        let g = OrientedGraph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 0)], Mode::Oriented)
            .unwrap();
        let w = triangle_winding(&g, 7).unwrap();
        assert!(w.is_valid_in(&g));
        assert_eq!(w.len(), 7);
        assert_eq!(w.strategy, WalkStrategy::TriangleWinding { plan: WindingPlan { t: 2, a: 2, r: 1 } });
        assert!(has_closed_walk(&g, 7).unwrap());
        assert_eq!(closed_walk_of_length(&g, 7).unwrap().unwrap().len(), 7);
    }
}
