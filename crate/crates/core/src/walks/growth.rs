use serde::{Deserialize, Serialize};

use super::WalkError;
use crate::graph::{OrientedGraph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StopReason {
    /// `|X_i| > n/2`.
    ExceededHalf { i: usize },
    /// `G[X_i]` contains the directed triangle.
    Triangle { i: usize, cycle: [usize; 3] },
    /// `X_{i+1} = X_i`.
    Fixpoint { i: usize },
}

/// The sets `X₁ = N⁺(x)`, `X_{i+1} = X_i ∪ N⁺(X_i)`, with `sets[i − 1] = X_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub sets: Vec<VertexSet>,
    pub stop: StopReason,
    /// First `i` with `|X_i| > n/2`.
    pub first_exceeding_half: Option<usize>,
}

impl GrowthReport {
    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(VertexSet::len).collect()
    }
}

fn triangle_within(g: &OrientedGraph, set: &VertexSet) -> Option<[usize; 3]> {
    for u in set.iter() {
        let back = g.in_neighbors(u).intersection(set);
        for v in g.out_neighbors(u).intersection(set).iter() {
            if let Some(w) = g.out_neighbors(v).intersection(&back).first() {
                return Some([u, v, w]);
            }
        }
    }
    None
}

/// Grows the reachable sets from `x`.
///
/// With `triangle_free_mode` the graph is taken to have no directed
/// triangle: growth stops once `|X_i| > n/2` or at a fixpoint. Otherwise
/// each `G[X_i]` is searched for a directed triangle and growth goes on past
/// the half-way mark until a triangle or a fixpoint is reached; the index
/// where the half-way mark was passed is still reported.
pub fn grow_reachable(g: &OrientedGraph, x: usize, triangle_free_mode: bool) -> Result<GrowthReport, WalkError> {
    let n = g.order();
    if x >= n {
        return Err(WalkError::OutOfRange { vertex: x, n });
    }
    let mut sets = vec![g.out_neighbors(x).clone()];
    let mut first_exceeding_half = None;
    loop {
        let i = sets.len();
        let current = &sets[i - 1];
        if first_exceeding_half.is_none() && 2 * current.len() > n {
            first_exceeding_half = Some(i);
            if triangle_free_mode {
                return Ok(GrowthReport { sets, stop: StopReason::ExceededHalf { i }, first_exceeding_half });
            }
        }
        if !triangle_free_mode {
            if let Some(cycle) = triangle_within(g, current) {
                return Ok(GrowthReport { sets, stop: StopReason::Triangle { i, cycle }, first_exceeding_half });
            }
        }
        let next = current.union(&g.out_neighborhood_of(current));
        if next == *current {
            return Ok(GrowthReport { sets, stop: StopReason::Fixpoint { i }, first_exceeding_half });
        }
        sets.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::blowup_cycle;
    use crate::graph::Mode;

    #[test]
    fn four_blowup_passes_half_at_three() {
        let g = blowup_cycle(4, 20).unwrap();
        let r = grow_reachable(&g, 0, true).unwrap();
        assert_eq!(r.stop, StopReason::ExceededHalf { i: 3 });
        assert_eq!(r.sizes(), vec![5, 10, 15]);
        assert!(g.diameter().unwrap() <= 6);
    }

    #[test]
    fn directed_triangle_found() {
        let g = OrientedGraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)], Mode::Oriented).unwrap();
        let r = grow_reachable(&g, 0, false).unwrap();
        assert!(matches!(r.stop, StopReason::Triangle { i: 3, .. }));
        assert_eq!(r.first_exceeding_half, Some(2));
    }

    #[test]
    fn acyclic_reaches_fixpoint() {
        let edges: Vec<_> = (0..8).flat_map(|u| (u + 1..8).map(move |v| (u, v))).collect();
        let g = OrientedGraph::from_edge_list(8, &edges, Mode::Oriented).unwrap();
        let r = grow_reachable(&g, 0, false).unwrap();
        assert_eq!(r.stop, StopReason::Fixpoint { i: 1 });
        assert_eq!(r.sizes(), vec![7]);
    }
}
