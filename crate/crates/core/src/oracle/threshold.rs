use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{pair_count, OrientedEnumerator, MAX_ENUMERATION_ORDER};
use super::{has_cycle_exact, Budget, OracleError, SearchOutcome};
use crate::constructions::{blowup_cycle, random_min_semidegree};
use crate::graph::{Mode, OrientedGraph};

/// Where a bound in a [`ThresholdRecord`] comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    /// Full labelled enumeration.
    Exhaustive,
    /// The empty graph; no better witness was found.
    Trivial,
    /// Blow-up of a `k`-cycle with `k ∤ ℓ`, absence re-checked by the oracle.
    Blowup { k: usize },
    /// Seeded random instance with the oracle-certified absence.
    RandomSample { seed: u64, index: u64 },
    /// `δ⁰ ≥ ⌊n/3⌋ + 1` forces a 4-, 5- and 6-cycle through every vertex.
    ShortCycleFinder,
    /// `δ⁰ ≥ ⌈2n/5⌉` forces a 3-cycle through every vertex.
    ThreeCycleDegreeBound,
    /// No oriented graph on `n` vertices has `δ⁰ > ⌊(n − 1)/2⌋`.
    DegreeCap,
}

/// Bounds on the least `d` such that every oriented graph on `n` vertices with
/// `δ⁰ ≥ d` has an `ℓ`-cycle.
///
/// `lower` is one more than the semidegree of the best cycle-free witness.
/// `upper` is a value known to force the cycle. The two agree whenever
/// `exhaustive` is set; a gap is reported as is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRecord {
    pub ell: usize,
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
    pub witness_semidegree: usize,
    #[serde(skip)]
    pub lower_witness: Option<OrientedGraph>,
    pub lower_provenance: Provenance,
    pub upper_provenance: Provenance,
    pub exhaustive: bool,
    pub shards: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThresholdOptions {
    /// Per-query budget for the exact cycle search.
    pub budget: Budget,
    /// Random instances tried per candidate degree above the best construction.
    pub samples: u64,
    pub seed: u64,
    /// Number of leading pairs fixed per shard in the exhaustive search.
    pub shard_depth: usize,
}

impl Default for ThresholdOptions {
    fn default() -> Self {
        ThresholdOptions { budget: Budget::nodes(5_000_000), samples: 8, seed: 0, shard_depth: 4 }
    }
}

pub fn threshold_search(
    ell: usize,
    n: usize,
    opts: &ThresholdOptions,
) -> Result<ThresholdRecord, OracleError> {
    if ell < 3 {
        return Err(OracleError::BadLength(ell));
    }
    if ell > n {
        return Err(OracleError::BadParams(format!("cycle length {ell} exceeds order {n}")));
    }
    if n <= MAX_ENUMERATION_ORDER {
        exhaustive(ell, n, opts)
    } else {
        bounded(ell, n, opts)
    }
}

enum ShardResult {
    Witness(OrientedGraph),
    Clean,
    Incomplete,
}

fn exhaustive(ell: usize, n: usize, opts: &ThresholdOptions) -> Result<ThresholdRecord, OracleError> {
    let cap = (n - 1) / 2;
    let prefixes = OrientedEnumerator::shard_prefixes(n, opts.shard_depth);
    let mut complete = true;
    for d in (0..=cap).rev() {
        let results: Vec<ShardResult> = prefixes
            .par_iter()
            .map(|prefix| {
                let mut result = ShardResult::Clean;
                for g in OrientedEnumerator::with_prefix(n, d, prefix).expect("valid prefix") {
                    match has_cycle_exact(&g, ell, None, opts.budget).expect("valid query") {
                        SearchOutcome::Absent => return ShardResult::Witness(g),
                        SearchOutcome::BudgetExceeded => result = ShardResult::Incomplete,
                        SearchOutcome::Found(_) => {}
                    }
                }
                result
            })
            .collect();
        complete &= !results.iter().any(|r| matches!(r, ShardResult::Incomplete));
        let witness = results.into_iter().find_map(|r| match r {
            ShardResult::Witness(g) => Some(g),
            _ => None,
        });
        if let Some(g) = witness {
            let semi = g.min_semidegree();
            return Ok(ThresholdRecord {
                ell,
                n,
                lower: semi + 1,
                upper: d + 1,
                witness_semidegree: semi,
                lower_witness: Some(g),
                lower_provenance: Provenance::Exhaustive,
                upper_provenance: if complete { Provenance::Exhaustive } else { Provenance::DegreeCap },
                exhaustive: complete,
                shards: prefixes.len(),
            });
        }
    }
    unreachable!("the empty graph has no cycle")
}

fn bounded(ell: usize, n: usize, opts: &ThresholdOptions) -> Result<ThresholdRecord, OracleError> {
    let cap = (n - 1) / 2;
    let mut best = OrientedGraph::empty(n, Mode::Oriented);
    let mut best_semi = 0;
    let mut lower_provenance = Provenance::Trivial;
    for k in 3..=n {
        if ell % k == 0 || n / k <= best_semi {
            continue;
        }
        let g = blowup_cycle(k, n).expect("3 <= k <= n");
        if has_cycle_exact(&g, ell, None, opts.budget)?.is_absent() {
            best_semi = g.min_semidegree();
            best = g;
            lower_provenance = Provenance::Blowup { k };
        }
    }
    for d in (best_semi + 1..=cap).rev() {
        let hit = (0..opts.samples)
            .into_par_iter()
            .map(|i| {
                let seed = opts.seed ^ ((d as u64) << 32) ^ i;
                let g = random_min_semidegree(n, d, seed).expect("d within the degree cap");
                let absent = has_cycle_exact(&g, ell, None, opts.budget).expect("valid query").is_absent();
                absent.then_some((i, seed, g))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next();
        if let Some((index, seed, g)) = hit {
            best_semi = g.min_semidegree();
            best = g;
            lower_provenance = Provenance::RandomSample { seed, index };
            break;
        }
    }
    let (mut upper, mut upper_provenance) = (cap + 1, Provenance::DegreeCap);
    let known = match ell {
        3 => Some(((2 * n).div_ceil(5), Provenance::ThreeCycleDegreeBound)),
        4..=6 => Some((n / 3 + 1, Provenance::ShortCycleFinder)),
        _ => None,
    };
    if let Some((bound, provenance)) = known {
        if bound < upper {
            upper = bound;
            upper_provenance = provenance;
        }
    }
    Ok(ThresholdRecord {
        ell,
        n,
        lower: best_semi + 1,
        upper,
        witness_semidegree: best_semi,
        lower_witness: Some(best),
        lower_provenance,
        upper_provenance,
        exhaustive: false,
        shards: 0,
    })
}

/// `C(n, 2) + (ℓ − 2)·n / 2`: the largest edge count of an `ℓ`-cycle-free
/// digraph on `n` vertices. Half-integral when `(ℓ − 2)·n` is odd.
pub fn ex_di_formula(ell: usize, n: usize) -> f64 {
    (n * n.saturating_sub(1) / 2) as f64 + (ell as f64 - 2.0) * n as f64 / 2.0
}

/// Largest edge count over all labelled digraphs on `n ≤ 4` vertices without
/// an `ℓ`-cycle (`4^{C(n,2)}` candidates).
pub fn ex_di_brute(ell: usize, n: usize) -> Result<usize, OracleError> {
    const LIMIT: usize = 4;
    if n > LIMIT {
        return Err(OracleError::TooLarge { n, limit: LIMIT });
    }
    if ell < 2 {
        return Err(OracleError::BadLength(ell));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 1u64 << (2 * pair_count(n));
    let mut best = 0;
    for code in 0..total {
        let mut edges = Vec::new();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            let s = (code >> (2 * k)) & 3;
            if s & 1 == 1 {
                edges.push((i, j));
            }
            if s & 2 == 2 {
                edges.push((j, i));
            }
        }
        if edges.len() <= best {
            continue;
        }
        let g = OrientedGraph::from_edge_list(n, &edges, Mode::Digraph).expect("simple digraph");
        if has_cycle_exact(&g, ell, None, Budget::unlimited())?.is_absent() {
            best = edges.len();
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_formula_values() {
        assert_eq!(ex_di_formula(3, 4), 8.0);
        assert_eq!(ex_di_formula(4, 6), 21.0);
        assert_eq!(ex_di_formula(3, 3), 4.5);
    }

    #[test]
    fn density_brute_force_small() {
        assert_eq!(ex_di_brute(3, 4).unwrap(), 8);
        assert_eq!(ex_di_brute(3, 3).unwrap(), 4);
        assert!(matches!(ex_di_brute(3, 5), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn triangle_threshold_on_five() {
        let r = threshold_search(3, 5, &ThresholdOptions::default()).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.lower, r.upper);
        let w = r.lower_witness.unwrap();
        assert_eq!(w.min_semidegree(), r.witness_semidegree);
        assert!(has_cycle_exact(&w, 3, None, Budget::unlimited()).unwrap().is_absent());
    }

    #[test]
    fn four_cycle_on_seven_uses_constructions_and_finder_bound() {
        let r = threshold_search(4, 7, &ThresholdOptions::default()).unwrap();
        assert!(!r.exhaustive);
        assert_eq!(r.lower, 3);
        assert_eq!(r.upper, 3);
        assert_eq!(r.upper_provenance, Provenance::ShortCycleFinder);
        assert_eq!(r.lower_provenance, Provenance::Blowup { k: 3 });
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(threshold_search(2, 5, &ThresholdOptions::default()).is_err());
        assert!(threshold_search(6, 5, &ThresholdOptions::default()).is_err());
    }
}
