use rand::seq::index::sample;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::graph::{OrientedGraph, VertexSet};
use crate::rng::task_rng;

/// Degree bound a half-split `U` is tested against, as a function of `u = |U|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SplitTarget {
    /// `(3/8 + α − u^{−3/8})·u`.
    Alpha { alpha: f64 },
    /// `f·u`.
    Fraction { f: f64 },
}

impl SplitTarget {
    pub fn bound(&self, u: usize) -> f64 {
        let u = u as f64;
        match *self {
            SplitTarget::Alpha { alpha } => (3.0 / 8.0 + alpha - u.powf(-3.0 / 8.0)) * u,
            SplitTarget::Fraction { f } => f * u,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplitExperimentConfig {
    pub trials: u64,
    pub target: SplitTarget,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplitReport {
    pub n: usize,
    pub u: usize,
    pub trials: u64,
    pub target_bound: f64,
    /// Splits with `δ⁰(G[U])` below the bound.
    pub split_failures: u64,
    pub split_failure_frequency: Option<f64>,
    /// Events `(trial, v ∈ U, side)` with the one-sided degree below the bound.
    pub vertex_failures: u64,
    pub vertex_failure_frequency: Option<f64>,
    pub min_semidegree: Option<usize>,
    pub mean_semidegree: Option<f64>,
    /// Large-deviation estimate `2·exp(−ε²·E/3)` for a single neighbourhood of
    /// size `δ⁰(G)`, where `(1 − ε)·E` is the bound; `None` if `E` is at most
    /// the bound.
    pub per_vertex_tail_bound: Option<f64>,
    /// `min(1, 2n · per_vertex_tail_bound)`.
    pub union_bound: Option<f64>,
    /// `n^{−2}`, the per-vertex rate the large-`n` argument needs.
    pub reference_rate: f64,
}

#[derive(Clone, Copy, Default)]
struct Tally {
    split_failures: u64,
    vertex_failures: u64,
    semi_sum: u64,
    semi_min: Option<usize>,
}

impl Tally {
    fn merge(self, other: Tally) -> Tally {
        Tally {
            split_failures: self.split_failures + other.split_failures,
            vertex_failures: self.vertex_failures + other.vertex_failures,
            semi_sum: self.semi_sum + other.semi_sum,
            semi_min: match (self.semi_min, other.semi_min) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }
}

/// Degrees are integers, so a degree counts as below the bound only when it
/// is below it by more than rounding noise in the bound itself.
fn below(degree: usize, bound: f64) -> bool {
    (degree as f64) + 1e-9 < bound
}

/// Samples uniform `U ⊆ V(G)` with `|U| = n/2` and measures `δ⁰(G[U])`.
///
/// Trial `i` draws from stream `i` of `seed`, so the report does not depend
/// on how trials are spread over threads.
pub fn random_split_experiment(
    g: &OrientedGraph,
    cfg: &SplitExperimentConfig,
    seed: u64,
) -> Result<SplitReport, OracleError> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(OracleError::OddOrder(n));
    }
    let u = n / 2;
    let bound = cfg.target.bound(u);
    let tally = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = task_rng(seed, trial);
            let members = VertexSet::from_vertices(n, sample(&mut rng, n, u).into_iter());
            let mut semi = usize::MAX;
            let mut vertex_failures = 0;
            for v in members.iter() {
                for d in [g.out_degree_within(v, &members), g.in_degree_within(v, &members)] {
                    semi = semi.min(d);
                    vertex_failures += u64::from(below(d, bound));
                }
            }
            let semi = if u == 0 { 0 } else { semi };
            Tally {
                split_failures: u64::from(below(semi, bound)),
                vertex_failures,
                semi_sum: semi as u64,
                semi_min: Some(semi),
            }
        })
        .reduce(Tally::default, Tally::merge);

    let trials = cfg.trials;
    let freq = |count: u64, per: u64| (per > 0).then(|| count as f64 / per as f64);
    let expected = g.min_semidegree() as f64 * u as f64 / n.max(1) as f64;
    let per_vertex_tail_bound = (expected > bound && expected > 0.0).then(|| {
        let eps = 1.0 - bound / expected;
        2.0 * (-eps * eps * expected / 3.0).exp()
    });
    Ok(SplitReport {
        n,
        u,
        trials,
        target_bound: bound,
        split_failures: tally.split_failures,
        split_failure_frequency: freq(tally.split_failures, trials),
        vertex_failures: tally.vertex_failures,
        vertex_failure_frequency: freq(tally.vertex_failures, trials * 2 * u as u64),
        min_semidegree: tally.semi_min,
        mean_semidegree: (trials > 0).then(|| tally.semi_sum as f64 / trials as f64),
        per_vertex_tail_bound,
        union_bound: per_vertex_tail_bound.map(|p| (2.0 * n as f64 * p).min(1.0)),
        reference_rate: (n.max(1) as f64).powi(-2),
    })
}
