use thiserror::Error;

use super::closed::closed_walk_of_length;
use super::pattern::{Gadget, ShapeKind, WalkShape};
use crate::graph::{OrientedGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("walk embedding needs an oriented graph")]
    NotOriented,
    #[error("no image found for {element}")]
    NotFound { element: String },
}

fn not_found(element: impl Into<String>) -> EmbedError {
    EmbedError::NotFound { element: element.into() }
}

/// `(z, y)` with `x → z → y` and `x → y`.
fn triangle_at(g: &OrientedGraph, x: usize) -> Option<(usize, usize)> {
    g.find_edge_within(g.out_neighbors(x))
}

/// `(y, z, y′)` with `y, y′ ∈ N⁺(x)` and `z ∈ N⁺(y) ∩ N⁻(y′)`.
fn square_at(g: &OrientedGraph, x: usize) -> Option<(usize, usize, usize)> {
    let out = g.out_neighbors(x);
    for y in out.iter() {
        for y2 in out.iter() {
            if let Some(z) = g.out_neighbors(y).intersection(g.in_neighbors(y2)).first() {
                return Some((y, z, y2));
            }
        }
    }
    None
}

fn anchors(g: &OrientedGraph, square: bool) -> VertexSet {
    let mut ok = g.empty_set();
    for x in 0..g.order() {
        let found = if square { square_at(g, x).is_some() } else { triangle_at(g, x).is_some() };
        if found {
            ok.insert(x);
        }
    }
    ok
}

fn element_name(g: &Gadget) -> String {
    match g {
        Gadget::Triangle { at, .. } => format!("transitive triangle at spine vertex {at}"),
        Gadget::Square { at, .. } => format!("fffb square at spine vertex {at}"),
    }
}

/// Homomorphic image of `shape` in `g`, as a map from shape vertices to graph
/// vertices. Images may repeat, as for walks.
///
/// A directed `k`-cycle is taken from a closed walk of length `k`. For path
/// shapes, the sets of vertices from which the rest of the spine (with its
/// gadgets) can still be completed are computed backwards; the spine is then
/// laid out by successor choice inside them, and each gadget is attached at
/// its spine vertex.
pub fn embed_walk_greedy(g: &OrientedGraph, shape: &WalkShape) -> Result<Vec<usize>, EmbedError> {
    if !g.is_oriented() {
        return Err(EmbedError::NotOriented);
    }
    if shape.kind == ShapeKind::DirectedCycle {
        let k = shape.k.unwrap_or(shape.vertex_count);
        let walk = closed_walk_of_length(g, k)
            .ok()
            .flatten()
            .ok_or_else(|| not_found(format!("directed {k}-cycle")))?;
        return Ok(walk.vertices[..k].to_vec());
    }

    let k2 = shape.k2;
    let mut required: Vec<Option<VertexSet>> = vec![None; k2 + 1];
    let mut tri_ok = None;
    let mut sq_ok = None;
    for gadget in &shape.gadgets {
        let ok = match gadget {
            Gadget::Triangle { .. } => tri_ok.get_or_insert_with(|| anchors(g, false)),
            Gadget::Square { .. } => sq_ok.get_or_insert_with(|| anchors(g, true)),
        };
        let slot = &mut required[gadget.at()];
        match slot {
            Some(s) => s.intersect_with(ok),
            None => *slot = Some(ok.clone()),
        }
    }

    let mut feasible = vec![g.empty_set(); k2 + 1];
    for j in (0..=k2).rev() {
        let mut f = if j == k2 { g.vertex_set() } else { g.in_neighborhood_of(&feasible[j + 1]) };
        if let Some(req) = &required[j] {
            f.intersect_with(req);
        }
        if f.is_empty() {
            let culprit = shape
                .gadgets
                .iter()
                .find(|gd| gd.at() == j && required[j].as_ref().is_some_and(|r| r.is_empty()))
                .map(element_name);
            return Err(not_found(culprit.unwrap_or_else(|| format!("spine vertex {j}"))));
        }
        feasible[j] = f;
    }

    let mut map = vec![usize::MAX; shape.vertex_count];
    map[0] = feasible[0].first().expect("checked non-empty");
    for j in 1..=k2 {
        map[j] = g
            .out_neighbors(map[j - 1])
            .intersection(&feasible[j])
            .first()
            .expect("feasible sets are backward-closed");
    }
    for gadget in &shape.gadgets {
        let x = map[gadget.at()];
        match *gadget {
            Gadget::Triangle { z, y, .. } => {
                let (gz, gy) = triangle_at(g, x).expect("anchor checked");
                map[z] = gz;
                map[y] = gy;
            }
            Gadget::Square { y, z, y2, .. } => {
                let (gy, gz, gy2) = square_at(g, x).expect("anchor checked");
                map[y] = gy;
                map[z] = gz;
                map[y2] = gy2;
            }
        }
    }
    debug_assert!(shape.edges.iter().all(|&(u, v)| g.has_edge(map[u], map[v])));
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blowup_cycle, rotational_tournament};
    use crate::walks::{pattern_to_walk, CyclePattern};

    fn shape(s: &str) -> WalkShape {
        pattern_to_walk(&s.parse::<CyclePattern>().unwrap())
    }

    fn check(g: &OrientedGraph, s: &WalkShape, map: &[usize]) {
        assert_eq!(map.len(), s.vertex_count);
        for &(u, v) in &s.edges {
            assert!(g.has_edge(map[u], map[v]), "{u}->{v} not mapped to an edge");
        }
    }

    #[test]
    fn directed_path_in_rotational() {
        let g = rotational_tournament(7).unwrap();
        let s = shape("fffffbbbbb");
        assert_eq!((s.kind, s.k2), (ShapeKind::DirectedPath, 5));
        let map = embed_walk_greedy(&g, &s).unwrap();
        check(&g, &s, &map);
    }

    #[test]
    fn no_transitive_triangle_in_blowup() {
        let g = blowup_cycle(3, 9).unwrap();
        let err = embed_walk_greedy(&g, &shape("ffb")).unwrap_err();
        assert!(matches!(err, EmbedError::NotFound { element } if element.contains("triangle")));
    }

    #[test]
    fn transitive_triangle_in_rotational() {
        let g = rotational_tournament(5).unwrap();
        let s = shape("ffb");
        let map = embed_walk_greedy(&g, &s).unwrap();
        check(&g, &s, &map);
    }

    #[test]
    fn square_and_cycle_shapes() {
        let g = rotational_tournament(9).unwrap();
        for p in ["fffb", "ffbffb", "fffff", "ffbfffbf", "bbbfb"] {
            let s = shape(p);
            let map = embed_walk_greedy(&g, &s).unwrap();
            check(&g, &s, &map);
        }
        let b = blowup_cycle(4, 8).unwrap();
        assert!(embed_walk_greedy(&b, &shape("fff")).is_err());
        let s = shape("ffffffff");
        check(&b, &s, &embed_walk_greedy(&b, &s).unwrap());
    }
}
