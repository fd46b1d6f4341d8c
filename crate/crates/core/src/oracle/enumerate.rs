use super::OracleError;
use crate::graph::{Mode, OrientedGraph};

/// Largest order the labelled enumeration accepts (`3^15` assignments).
pub const MAX_ENUMERATION_ORDER: usize = 6;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labelled oriented graph on `n` vertices with `δ⁰ ≥ min_semi`, each
/// exactly once.
pub fn enumerate_oriented(n: usize, min_semi: usize) -> Result<OrientedEnumerator, OracleError> {
    OrientedEnumerator::with_prefix(n, min_semi, &[])
}

/// Depth-first walk over assignments of the pairs `(i, j)`, `i < j`, in
/// lexicographic order. Each pair is absent (0), `i → j` (1) or `j → i` (2).
///
/// A branch is cut as soon as one of its endpoints can no longer reach
/// out-degree, in-degree or total degree `min_semi`, `min_semi`, `2·min_semi`
/// with the pairs still open. Fixing a prefix of the assignment vector gives
/// an independent shard; shards taken in prefix order concatenate to the full
/// stream.
#[derive(Clone, Debug)]
pub struct OrientedEnumerator {
    n: usize,
    min_semi: usize,
    pairs: Vec<(usize, usize)>,
    assign: Vec<u8>,
    trial: Vec<u8>,
    out_deg: Vec<usize>,
    in_deg: Vec<usize>,
    open: Vec<usize>,
    depth: usize,
    floor: usize,
    started: bool,
    dead: bool,
}

impl OrientedEnumerator {
    pub fn with_prefix(n: usize, min_semi: usize, prefix: &[u8]) -> Result<Self, OracleError> {
        if n > MAX_ENUMERATION_ORDER {
            return Err(OracleError::TooLarge { n, limit: MAX_ENUMERATION_ORDER });
        }
        let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        if prefix.len() > pairs.len() || prefix.iter().any(|&s| s > 2) {
            return Err(OracleError::BadParams(format!("invalid shard prefix {prefix:?}")));
        }
        let mut e = OrientedEnumerator {
            n,
            min_semi,
            assign: vec![0; pairs.len()],
            trial: vec![0; pairs.len() + 1],
            out_deg: vec![0; n],
            in_deg: vec![0; n],
            open: vec![n.saturating_sub(1); n],
            pairs,
            depth: 0,
            floor: prefix.len(),
            started: false,
            dead: false,
        };
        e.dead = !(0..n).all(|v| e.vertex_ok(v));
        for (k, &s) in prefix.iter().enumerate() {
            e.apply(k, s);
            if !e.pair_ok(k) {
                e.dead = true;
            }
        }
        e.depth = prefix.len();
        Ok(e)
    }

    /// All `3^depth` shard prefixes in lexicographic order (depth clipped to
    /// the number of pairs).
    pub fn shard_prefixes(n: usize, depth: usize) -> Vec<Vec<u8>> {
        let depth = depth.min(pair_count(n));
        let mut out = vec![Vec::new()];
        for _ in 0..depth {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..3u8).map(move |s| {
                        let mut q = p.clone();
                        q.push(s);
                        q
                    })
                })
                .collect();
        }
        out
    }

    fn vertex_ok(&self, v: usize) -> bool {
        let d = self.min_semi;
        let open = self.open[v];
        self.out_deg[v] + open >= d
            && self.in_deg[v] + open >= d
            && self.out_deg[v] + self.in_deg[v] + open >= 2 * d
    }

    fn pair_ok(&self, k: usize) -> bool {
        let (i, j) = self.pairs[k];
        self.vertex_ok(i) && self.vertex_ok(j)
    }

    fn apply(&mut self, k: usize, s: u8) {
        let (i, j) = self.pairs[k];
        self.assign[k] = s;
        self.open[i] -= 1;
        self.open[j] -= 1;
        match s {
            1 => {
                self.out_deg[i] += 1;
                self.in_deg[j] += 1;
            }
            2 => {
                self.out_deg[j] += 1;
                self.in_deg[i] += 1;
            }
            _ => {}
        }
    }

    fn undo(&mut self, k: usize) {
        let (i, j) = self.pairs[k];
        self.open[i] += 1;
        self.open[j] += 1;
        match self.assign[k] {
            1 => {
                self.out_deg[i] -= 1;
                self.in_deg[j] -= 1;
            }
            2 => {
                self.out_deg[j] -= 1;
                self.in_deg[i] -= 1;
            }
            _ => {}
        }
        self.assign[k] = 0;
    }

    fn backtrack(&mut self) -> bool {
        if self.depth == self.floor {
            return false;
        }
        self.depth -= 1;
        self.undo(self.depth);
        true
    }

    /// Moves to the next complete feasible assignment.
    fn advance(&mut self) -> bool {
        if self.dead {
            return false;
        }
        let total = self.pairs.len();
        if !self.started {
            self.started = true;
            self.trial[self.depth] = 0;
            if self.depth == total {
                return true;
            }
        } else if !self.backtrack() {
            return false;
        }
        loop {
            let k = self.depth;
            if self.trial[k] > 2 {
                if !self.backtrack() {
                    return false;
                }
                continue;
            }
            let s = self.trial[k];
            self.trial[k] += 1;
            self.apply(k, s);
            if self.pair_ok(k) {
                self.depth += 1;
                if self.depth == total {
                    return true;
                }
                self.trial[self.depth] = 0;
            } else {
                self.undo(k);
            }
        }
    }

    fn current(&self) -> OrientedGraph {
        let edges: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .zip(&self.assign)
            .filter_map(|(&(i, j), &s)| match s {
                1 => Some((i, j)),
                2 => Some((j, i)),
                _ => None,
            })
            .collect();
        OrientedGraph::from_edge_list(self.n, &edges, Mode::Oriented).expect("one edge per pair")
    }
}

impl Iterator for OrientedEnumerator {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<OrientedGraph> {
        if self.advance() {
            Some(self.current())
        } else {
            self.dead = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{has_cycle_exact, Budget};

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_oriented(0, 0).unwrap().count(), 1);
        assert_eq!(enumerate_oriented(1, 0).unwrap().count(), 1);
        assert_eq!(enumerate_oriented(1, 1).unwrap().count(), 0);
        assert_eq!(enumerate_oriented(2, 0).unwrap().count(), 3);
        assert_eq!(enumerate_oriented(3, 0).unwrap().count(), 27);
        assert_eq!(enumerate_oriented(4, 0).unwrap().count(), 729);
        assert_eq!(enumerate_oriented(4, 2).unwrap().count(), 0);
        assert!(matches!(enumerate_oriented(7, 0), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn two_directed_triangles_on_three_vertices() {
        let with_triangle = enumerate_oriented(3, 0)
            .unwrap()
            .filter(|g| has_cycle_exact(g, 3, None, Budget::unlimited()).unwrap().is_found())
            .count();
        assert_eq!(with_triangle, 2);
        assert_eq!(enumerate_oriented(3, 1).unwrap().count(), 2);
    }

    #[test]
    fn filter_matches_post_hoc_degree_check() {
        for n in 3..=5 {
            for d in 1..=2 {
                let filtered = enumerate_oriented(n, d).unwrap().count();
                let brute = enumerate_oriented(n, 0).unwrap().filter(|g| g.min_semidegree() >= d).count();
                assert_eq!(filtered, brute, "n = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn shards_partition_the_stream() {
        let whole: Vec<_> = enumerate_oriented(4, 1).unwrap().collect();
        let sharded: Vec<_> = OrientedEnumerator::shard_prefixes(4, 2)
            .iter()
            .flat_map(|p| OrientedEnumerator::with_prefix(4, 1, p).unwrap())
            .collect();
        assert_eq!(whole, sharded);
        assert_eq!(OrientedEnumerator::shard_prefixes(2, 5).len(), 3);
    }
}
