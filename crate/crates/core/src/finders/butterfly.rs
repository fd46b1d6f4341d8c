use serde::{Deserialize, Serialize};

use super::{
    check_oriented, finish_cycle, third_plus_one, Branch, CycleWitness, FinderError, FinderOptions,
    FinderReport, FinderTrace,
};
use crate::graph::OrientedGraph;

/// Five vertices with edges `xa, xz, az, zb, zy, by`, giving `x`–`y` paths of
/// lengths 2, 3 and 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Butterfly {
    pub x: usize,
    pub a: usize,
    pub z: usize,
    pub b: usize,
    pub y: usize,
}

impl Butterfly {
    /// The `x`–`y` path of the given length (2, 3 or 4).
    pub fn path(&self, len: usize) -> Option<Vec<usize>> {
        let Butterfly { x, a, z, b, y } = *self;
        match len {
            2 => Some(vec![x, z, y]),
            3 => Some(vec![x, a, z, y]),
            4 => Some(vec![x, a, z, b, y]),
            _ => None,
        }
    }

    pub fn vertices(&self) -> [usize; 5] {
        [self.x, self.a, self.z, self.b, self.y]
    }

    pub fn is_in(&self, g: &OrientedGraph) -> bool {
        let Butterfly { x, a, z, b, y } = *self;
        let mut vs = self.vertices();
        vs.sort_unstable();
        vs.windows(2).all(|w| w[0] != w[1])
            && [(x, a), (x, z), (a, z), (z, b), (z, y), (b, y)]
                .iter()
                .all(|&(p, q)| g.has_edge(p, q))
    }
}

/// An `xy`-butterfly for some `y`: an edge `a → z` inside `N⁺(x)`, then an
/// edge `b → y` inside `N⁺(z)`.
///
/// Edges `a → z` are tried in scan order, so the first one is the one the
/// degree argument uses, and later ones make the search complete.
pub fn find_butterfly(g: &OrientedGraph, x: usize) -> Result<FinderReport<Butterfly>, FinderError> {
    check_oriented(g, x)?;
    let mut trace = FinderTrace::new(third_plus_one(g), true);
    trace.branch = Some(Branch::ButterflyScan);
    let witness = butterfly_scan(g, x, &mut trace);
    trace.butterfly = witness;
    Ok(FinderReport { witness, trace })
}

fn butterfly_scan(g: &OrientedGraph, x: usize, trace: &mut FinderTrace) -> Option<Butterfly> {
    let out = g.out_neighbors(x);
    trace.record("N+(x)", out);
    for a in out.iter() {
        for z in g.out_neighbors(a).intersection(out).iter() {
            if let Some((b, y)) = g.find_edge_within(g.out_neighbors(z)) {
                let bf = Butterfly { x, a, z, b, y };
                debug_assert!(bf.is_in(g));
                return Some(bf);
            }
        }
    }
    trace.fail("no edge a->z in N+(x) whose head has a non-independent out-neighbourhood")
}

/// 6-cycle through `x`.
///
/// From an `xy`-butterfly, a `y`–`x` path of length 2, 3 (avoiding `a`) or 4
/// (avoiding `z`) closes a 6-cycle with the butterfly path of length 4, 3 or
/// 2. The first two are direct searches. For the third, `Y` takes
/// `⌊n/3⌋ − 1` out-neighbours of `y` other than `a, x`, `X` takes `⌊n/3⌋`
/// in-neighbours of `x` other than `y`, and a vertex of
/// `(N⁻(X)∖X) ∩ (N⁺(Y)∖Y)` other than `z` bridges them.
pub fn find_6cycle_through(
    g: &OrientedGraph,
    x: usize,
    opts: &FinderOptions,
) -> Result<FinderReport<CycleWitness>, FinderError> {
    check_oriented(g, x)?;
    let n = g.order();
    let mut trace = FinderTrace::new(third_plus_one(g), n >= 6);
    let bf = butterfly_scan(g, x, &mut trace);
    trace.butterfly = bf;
    let proof = bf.and_then(|bf| six_cycle_proof(g, bf, &mut trace));
    Ok(finish_cycle(g, x, 6, proof, trace, opts))
}

fn six_cycle_proof(g: &OrientedGraph, bf: Butterfly, trace: &mut FinderTrace) -> Option<Vec<usize>> {
    let Butterfly { x, a, z, b, y } = bf;
    let n = g.order();
    let into_x = g.in_neighbors(x);

    if let Some(w) = g.out_neighbors(y).intersection(into_x).first() {
        trace.branch = Some(Branch::SixReturnTwo);
        return Some(vec![x, a, z, b, y, w]);
    }

    let three = g.out_neighbors(y).iter().filter(|&w| w != a && w != x).find_map(|w1| {
        let mut next = g.out_neighbors(w1).intersection(into_x);
        for v in [a, y, z] {
            next.remove(v);
        }
        next.first().map(|w2| (w1, w2))
    });
    if let Some((w1, w2)) = three {
        trace.branch = Some(Branch::SixReturnThree);
        return Some(vec![x, a, z, y, w1, w2]);
    }

    trace.branch = Some(Branch::SixReturnFour);
    let third = n / 3;
    let mut y_pool = g.out_neighbors(y).clone();
    y_pool.remove(a);
    y_pool.remove(x);
    let mut x_pool = into_x.clone();
    x_pool.remove(y);
    let big_y = y_pool.lowest(third.saturating_sub(1));
    let big_x = x_pool.lowest(third);
    let x_prime = g.in_neighborhood_of(&big_x).difference(&big_x);
    let y_prime = g.out_neighborhood_of(&big_y).difference(&big_y);
    trace.record("X", &big_x);
    trace.record("Y", &big_y);
    trace.record("X'", &x_prime);
    trace.record("Y'", &y_prime);
    let mut bridge = x_prime.intersection(&y_prime);
    for v in [z, x, y] {
        bridge.remove(v);
    }
    for w in bridge.iter() {
        for y1 in g.in_neighbors(w).intersection(&big_y).iter() {
            for x1 in g.out_neighbors(w).intersection(&big_x).iter() {
                let cycle = vec![x, z, y, y1, w, x1];
                if (CycleWitness { vertices: cycle.clone(), through: Some(x) }).validate(g).is_ok() {
                    return Some(cycle);
                }
            }
        }
    }
    trace.fail("X' and Y' share no usable bridge vertex")
}
