use std::collections::HashMap;

use super::OracleError;
use crate::graph::{OrientedGraph, VertexSet};

/// Square boolean matrix with bitset rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<VertexSet>,
}

impl BitMatrix {
    pub fn identity(n: usize) -> Self {
        BitMatrix { rows: (0..n).map(|i| VertexSet::from_vertices(n, [i])).collect() }
    }

    pub fn adjacency(g: &OrientedGraph) -> Self {
        BitMatrix { rows: (0..g.order()).map(|v| g.out_neighbors(v).clone()).collect() }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Boolean product: row `i` is the union of `other`'s rows picked by row `i`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        let n = self.order();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = VertexSet::new(n);
                for j in row.iter() {
                    acc.union_with(&other.rows[j]);
                }
                acc
            })
            .collect();
        BitMatrix { rows }
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> BitMatrix {
        let mut result = BitMatrix::identity(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn diagonal(&self) -> VertexSet {
        VertexSet::from_vertices(self.order(), (0..self.order()).filter(|&i| self.get(i, i)))
    }
}

/// Whether some vertex lies on a closed walk of exactly `ell` steps.
pub fn has_closed_walk(g: &OrientedGraph, ell: usize) -> Result<bool, OracleError> {
    if ell == 0 {
        return Err(OracleError::BadLength(ell));
    }
    Ok(!BitMatrix::adjacency(g).pow(ell as u64).diagonal().is_empty())
}

/// A closed walk `v₀ v₁ … v_ℓ` with `v₀ = v_ℓ`, or `None` if there is none.
///
/// The exact-step reachable sets from the chosen start are eventually
/// periodic, so only the pre-period and one period are stored even for long
/// walks. The walk is read off backwards through those sets.
pub fn closed_walk_witness(g: &OrientedGraph, ell: usize) -> Option<Vec<usize>> {
    if ell == 0 {
        return None;
    }
    let start = BitMatrix::adjacency(g).pow(ell as u64).diagonal().first()?;
    let mut layers = vec![VertexSet::from_vertices(g.order(), [start])];
    let mut seen = HashMap::new();
    seen.insert(layers[0].clone(), 0usize);
    let mut cycle: Option<(usize, usize)> = None;
    while layers.len() <= ell {
        let next = g.out_neighborhood_of(layers.last().unwrap());
        if let Some(&j) = seen.get(&next) {
            cycle = Some((j, layers.len() - j));
            break;
        }
        seen.insert(next.clone(), layers.len());
        layers.push(next);
    }
    let layer = |m: usize| match cycle {
        Some((j, period)) if m >= j => &layers[j + (m - j) % period],
        _ => &layers[m],
    };
    debug_assert!(layer(ell).contains(start));
    let mut walk = vec![start; ell + 1];
    for m in (0..ell).rev() {
        let after = walk[m + 1];
        walk[m] = g.in_neighbors(after).intersection(layer(m)).first()?;
    }
    debug_assert_eq!(walk[0], start);
    Some(walk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blowup_cycle, complete_bipartite_digraph};
    use crate::graph::Mode;

    fn triangle() -> OrientedGraph {
        OrientedGraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)], Mode::Oriented).unwrap()
    }

    #[test]
    fn triangle_walks() {
        let t = triangle();
        assert!(has_closed_walk(&t, 6).unwrap());
        assert!(!has_closed_walk(&t, 4).unwrap());
        assert_eq!(closed_walk_witness(&t, 6), Some(vec![0, 1, 2, 0, 1, 2, 0]));
        assert_eq!(closed_walk_witness(&t, 5), None);
        assert_eq!(has_closed_walk(&t, 0), Err(OracleError::BadLength(0)));
    }

    #[test]
    fn bipartite_parity() {
        let g = complete_bipartite_digraph(6).unwrap();
        assert!(!has_closed_walk(&g, 5).unwrap());
        assert!(has_closed_walk(&g, 2).unwrap());
    }

    #[test]
    fn long_walks_use_the_period() {
        let g = blowup_cycle(4, 9).unwrap();
        let w = closed_walk_witness(&g, 4000).unwrap();
        assert_eq!(w.len(), 4001);
        assert_eq!(w[0], w[4000]);
        assert!(w.windows(2).all(|p| g.has_edge(p[0], p[1])));
        assert!(closed_walk_witness(&g, 4001).is_none());
    }

    #[test]
    fn power_matches_repeated_product() {
        let g = blowup_cycle(3, 7).unwrap();
        let a = BitMatrix::adjacency(&g);
        let mut slow = BitMatrix::identity(7);
        for _ in 0..5 {
            slow = slow.mul(&a);
        }
        assert_eq!(a.pow(5), slow);
    }
}
