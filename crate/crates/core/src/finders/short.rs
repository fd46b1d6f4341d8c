use super::{
    check_oriented, finish_cycle, third_plus_one, Branch, CycleWitness, FallbackOutcome, FinderError,
    FinderOptions, FinderReport, FinderTrace,
};
use crate::graph::{OrientedGraph, VertexSet};

/// 3-cycle through `u`.
///
/// Takes `x ∈ N⁺(u)` with the fewest out-neighbours inside `N⁺(u)`; when
/// `δ⁰ ≥ ⌈2n/5⌉` such an `x` must send an edge into `N⁻(u)`. Otherwise every
/// `x ∈ N⁺(u)` is scanned, which decides the question exactly.
pub fn find_3cycle_through(
    g: &OrientedGraph,
    u: usize,
    opts: &FinderOptions,
) -> Result<FinderReport<CycleWitness>, FinderError> {
    check_oriented(g, u)?;
    let n = g.order();
    let mut trace = FinderTrace::new(g.min_semidegree() >= (2 * n).div_ceil(5), n >= 3);
    let out = g.out_neighbors(u);
    let inn = g.in_neighbors(u);
    trace.record("N+(u)", out);
    let proof = g.low_outdegree_vertex(out).ok().and_then(|x| {
        let w = g.out_neighbors(x).intersection(inn).first()?;
        Some(vec![u, x, w])
    });
    if let Some(cycle) = proof {
        trace.branch = Some(Branch::ThreeCycleLowDegree);
        let witness = CycleWitness { vertices: cycle, through: Some(u) };
        debug_assert!(witness.validate(g).is_ok());
        return Ok(FinderReport { witness: Some(witness), trace });
    }
    trace.fail::<()>("low out-degree vertex of N+(u) has no out-neighbour in N-(u)");
    if !opts.fallback {
        return Ok(FinderReport { witness: None, trace });
    }
    trace.fallback_used = true;
    let witness = out
        .iter()
        .find_map(|x| g.out_neighbors(x).intersection(inn).first().map(|w| vec![u, x, w]))
        .map(|vertices| CycleWitness { vertices, through: Some(u) });
    trace.fallback_outcome =
        Some(if witness.is_some() { FallbackOutcome::Found } else { FallbackOutcome::Absent });
    Ok(FinderReport { witness, trace })
}

/// 4-cycle through `x`.
///
/// With `q = ⌊n/3⌋ + 1`, `X` and `Y` are the `q` lowest out- and
/// in-neighbours of `x`. Condition (i) asks for `x′ ∈ X` with at least `q/2`
/// out-neighbours outside `X ∪ Y`, condition (ii) the mirror statement for
/// `Y`. If both hold, such `x′`, `y′` share an out/in-neighbour `w` outside
/// `X ∪ Y`. If (i) fails, `X′` collects the vertices of `X` with an
/// in-neighbour in `X`, and a vertex of `X′` with least out-degree inside `X′`
/// must reach `Y`. If only (ii) fails the argument runs on `Y′`.
pub fn find_4cycle_through(
    g: &OrientedGraph,
    x: usize,
    opts: &FinderOptions,
) -> Result<FinderReport<CycleWitness>, FinderError> {
    check_oriented(g, x)?;
    let n = g.order();
    let mut trace = FinderTrace::new(third_plus_one(g), n >= 4);
    let proof = four_cycle_proof(g, x, &mut trace);
    Ok(finish_cycle(g, x, 4, proof, trace, opts))
}

fn four_cycle_proof(g: &OrientedGraph, x: usize, trace: &mut FinderTrace) -> Option<Vec<usize>> {
    let q = g.order() / 3 + 1;
    let big_x = g.out_neighbors(x).lowest(q);
    let big_y = g.in_neighbors(x).lowest(q);
    trace.record("X", &big_x);
    trace.record("Y", &big_y);
    if big_x.len() < q || big_y.len() < q {
        return trace.fail("fewer than floor(n/3)+1 out- or in-neighbours");
    }
    let xy = big_x.union(&big_y);
    let cond_i = big_x
        .iter()
        .find(|&v| 2 * g.out_neighbors(v).difference(&xy).len() >= q);
    let cond_ii = big_y
        .iter()
        .find(|&v| 2 * g.in_neighbors(v).difference(&xy).len() >= q);
    match (cond_i, cond_ii) {
        (Some(x1), Some(y1)) => {
            trace.branch = Some(Branch::FourCommonVertex);
            let mut common = g.out_neighbors(x1).intersection(g.in_neighbors(y1));
            common.difference_with(&xy);
            let Some(w) = common.first() else {
                return trace.fail("no common neighbour outside X and Y");
            };
            Some(vec![x, x1, w, y1])
        }
        (None, _) => {
            trace.branch = Some(Branch::FourOutBranch);
            let x_prime = VertexSet::from_vertices(
                g.order(),
                big_x.iter().filter(|&v| g.in_degree_within(v, &big_x) > 0),
            );
            trace.record("X'", &x_prime);
            let Ok(x1) = g.low_outdegree_vertex(&x_prime) else {
                return trace.fail("X' is empty");
            };
            let Some(y) = g.out_neighbors(x1).intersection(&big_y).first() else {
                return trace.fail("chosen vertex of X' has no out-neighbour in Y");
            };
            let x2 = g.in_neighbors(x1).intersection(&big_x).first()?;
            Some(vec![x, x2, x1, y])
        }
        (Some(_), None) => {
            trace.branch = Some(Branch::FourInBranch);
            let y_prime = VertexSet::from_vertices(
                g.order(),
                big_y.iter().filter(|&v| g.out_degree_within(v, &big_y) > 0),
            );
            trace.record("Y'", &y_prime);
            let Ok(y1) = g.low_indegree_vertex(&y_prime) else {
                return trace.fail("Y' is empty");
            };
            let Some(x1) = g.in_neighbors(y1).intersection(&big_x).first() else {
                return trace.fail("chosen vertex of Y' has no in-neighbour in X");
            };
            let y2 = g.out_neighbors(y1).intersection(&big_y).first()?;
            Some(vec![x, x1, y1, y2])
        }
    }
}

/// 5-cycle through `x`.
///
/// An edge `y → a` inside `N⁻(x)` is taken first (the first one found).
/// `X` holds `⌊n/3⌋ + 1` out-neighbours of `x`, `Y` as many in-neighbours of
/// `y`, and `Z = X ∩ Y`. An `X`–`Y` edge `x′ → y′` closes `x x′ y′ y a`.
/// Failing that, `x′ ∈ X∖Z` of least out-degree inside `X∖Z` and `y′ ∈ Y∖Z`
/// of least in-degree inside `Y∖Z` have a common neighbour `w` outside
/// `X ∪ Y`, closing `x x′ w y′ y` with the edge `y → x`.
pub fn find_5cycle_through(
    g: &OrientedGraph,
    x: usize,
    opts: &FinderOptions,
) -> Result<FinderReport<CycleWitness>, FinderError> {
    check_oriented(g, x)?;
    let n = g.order();
    let mut trace = FinderTrace::new(third_plus_one(g), n >= 5);
    let proof = five_cycle_proof(g, x, &mut trace);
    Ok(finish_cycle(g, x, 5, proof, trace, opts))
}

fn five_cycle_proof(g: &OrientedGraph, x: usize, trace: &mut FinderTrace) -> Option<Vec<usize>> {
    let q = g.order() / 3 + 1;
    let Some((y, a)) = g.find_edge_within(g.in_neighbors(x)) else {
        return trace.fail("N-(x) is independent");
    };
    let big_x = g.out_neighbors(x).lowest(q);
    let big_y = g.in_neighbors(y).lowest(q);
    let z = big_x.intersection(&big_y);
    trace.record("X", &big_x);
    trace.record("Y", &big_y);
    trace.record("Z", &z);
    if big_x.len() < q || big_y.len() < q {
        return trace.fail("fewer than floor(n/3)+1 out-neighbours of x or in-neighbours of y");
    }
    let cross = big_x
        .iter()
        .find_map(|x1| g.out_neighbors(x1).intersection(&big_y).first().map(|y1| (x1, y1)));
    if let Some((x1, y1)) = cross {
        trace.branch = Some(Branch::FiveCrossEdge);
        return Some(vec![x, x1, y1, y, a]);
    }
    trace.branch = Some(Branch::FiveCommonVertex);
    let x_rest = big_x.difference(&z);
    let y_rest = big_y.difference(&z);
    let Ok(x1) = g.low_outdegree_vertex(&x_rest) else {
        return trace.fail("X \\ Z is empty");
    };
    let Ok(y1) = g.low_indegree_vertex(&y_rest) else {
        return trace.fail("Y \\ Z is empty");
    };
    let mut common = g.out_neighbors(x1).intersection(g.in_neighbors(y1));
    common.difference_with(&big_x.union(&big_y));
    common.remove(x);
    common.remove(y);
    let Some(w) = common.first() else {
        return trace.fail("x' and y' have no common neighbour outside X and Y");
    };
    Some(vec![x, x1, w, y1, y])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blowup_cycle, extremal_3cycle_vertex, rotational_tournament};
    use crate::graph::Mode;

    fn opts() -> FinderOptions {
        FinderOptions::default()
    }

    #[test]
    fn three_cycles() {
        let r5 = rotational_tournament(5).unwrap();
        let r = find_3cycle_through(&r5, 0, &opts()).unwrap();
        assert_eq!(r.witness.unwrap().vertices, vec![0, 2, 3]);
        assert!(!r.trace.fallback_used);
        assert!(r.trace.hypothesis_met());

        let e = extremal_3cycle_vertex(2).unwrap();
        let r = find_3cycle_through(&e.graph, e.u, &opts()).unwrap();
        assert!(r.witness.is_none());
        assert!(r.trace.fallback_used);
        assert!(!r.trace.degree_condition_met);

        let t = OrientedGraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)], Mode::Oriented).unwrap();
        assert_eq!(find_3cycle_through(&t, 0, &opts()).unwrap().witness.unwrap().vertices, vec![0, 1, 2]);
    }

    #[test]
    fn four_cycles() {
        let r7 = rotational_tournament(7).unwrap();
        let r = find_4cycle_through(&r7, 0, &opts()).unwrap();
        let w = r.witness.unwrap();
        assert!(w.validate(&r7).is_ok());
        assert!(!r.trace.fallback_used);
        assert_eq!(r.trace.sets["X"].len(), 7 / 3 + 1);

        let b = blowup_cycle(3, 9).unwrap();
        let r = find_4cycle_through(&b, 0, &opts()).unwrap();
        assert!(r.witness.is_none());
        assert!(!r.trace.hypothesis_met());
        assert_eq!(r.trace.fallback_outcome, Some(FallbackOutcome::Absent));

        let b4 = blowup_cycle(4, 12).unwrap();
        let r = find_4cycle_through(&b4, 0, &opts()).unwrap();
        let w = r.witness.unwrap();
        assert!(w.validate(&b4).is_ok());
        assert!(r.trace.fallback_used);
    }

    #[test]
    fn five_cycles() {
        for (n, x) in [(7, 0), (11, 5)] {
            let g = rotational_tournament(n).unwrap();
            let r = find_5cycle_through(&g, x, &opts()).unwrap();
            assert!(r.witness.unwrap().validate(&g).is_ok());
            assert!(!r.trace.fallback_used);
        }
        let b = blowup_cycle(3, 9).unwrap();
        assert!(find_5cycle_through(&b, 0, &opts()).unwrap().witness.is_none());
    }

    #[test]
    fn no_fallback_when_disabled() {
        let b = blowup_cycle(4, 12).unwrap();
        let o = FinderOptions { fallback: false, ..opts() };
        let r = find_4cycle_through(&b, 0, &o).unwrap();
        assert!(r.witness.is_none());
        assert!(!r.trace.fallback_used);
        assert!(r.trace.failed_step.is_some());
    }

    #[test]
    fn rejects_digraphs() {
        let g = OrientedGraph::from_edge_list(2, &[(0, 1), (1, 0)], Mode::Digraph).unwrap();
        assert_eq!(find_4cycle_through(&g, 0, &opts()), Err(FinderError::NotOriented));
    }
}
