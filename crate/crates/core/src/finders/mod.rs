//! Constructive cycle and path finders.
//!
//! Each finder first runs the explicit procedure that proves the cycle
//! exists under a minimum-semidegree hypothesis. When a step of that
//! procedure comes up empty, which can only happen below the hypothesis, it
//! falls back to the exact oracle search and says so in the trace. Every
//! witness is re-validated against the host graph before it is returned.

mod butterfly;
mod long;
mod short;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{OrientedGraph, VertexSet};
use crate::oracle::{has_cycle_exact, Budget, SearchOutcome};

pub use butterfly::{find_6cycle_through, find_butterfly, Butterfly};
pub use long::{find_lcycle_through, find_path_345, PathConstants};
pub use short::{find_3cycle_through, find_4cycle_through, find_5cycle_through};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinderError {
    #[error("finder needs an oriented graph")]
    NotOriented,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("cycle length {0} is not supported")]
    BadLength(usize),
    #[error("path endpoints must differ")]
    SameEndpoints,
    #[error("endpoint {0} lies in the avoided set")]
    EndpointAvoided(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witness is too short")]
    TooShort,
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("missing edge {0}->{1}")]
    MissingEdge(usize, usize),
    #[error("vertex {0} repeated")]
    Repeated(usize),
    #[error("required vertex {0} not on the cycle")]
    MissingThrough(usize),
}

/// A directed cycle `v₁ → v₂ → … → v_ℓ → v₁` on distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub through: Option<usize>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn validate(&self, g: &OrientedGraph) -> Result<(), WitnessError> {
        let vs = &self.vertices;
        if vs.len() < 2 {
            return Err(WitnessError::TooShort);
        }
        check_distinct(g, vs)?;
        for i in 0..vs.len() {
            let (u, v) = (vs[i], vs[(i + 1) % vs.len()]);
            if !g.has_edge(u, v) {
                return Err(WitnessError::MissingEdge(u, v));
            }
        }
        match self.through {
            Some(t) if !vs.contains(&t) => Err(WitnessError::MissingThrough(t)),
            _ => Ok(()),
        }
    }
}

fn check_distinct(g: &OrientedGraph, vs: &[usize]) -> Result<(), WitnessError> {
    let mut seen = VertexSet::new(g.order());
    for &v in vs {
        if v >= g.order() {
            return Err(WitnessError::OutOfRange(v));
        }
        if seen.contains(v) {
            return Err(WitnessError::Repeated(v));
        }
        seen.insert(v);
    }
    Ok(())
}

/// Checks that `path` is a directed path on distinct vertices.
pub fn validate_path(g: &OrientedGraph, path: &[usize]) -> Result<(), WitnessError> {
    if path.is_empty() {
        return Err(WitnessError::TooShort);
    }
    check_distinct(g, path)?;
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(WitnessError::MissingEdge(w[0], w[1]));
        }
    }
    Ok(())
}

/// Which case of a proof produced the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Out-neighbour of minimum inside out-degree, then an edge back to the start.
    ThreeCycleLowDegree,
    /// Both degree conditions hold; common vertex outside `X ∪ Y`.
    FourCommonVertex,
    /// Out-condition fails; cycle through a vertex of `X′`.
    FourOutBranch,
    /// In-condition fails; cycle through a vertex of `Y′`.
    FourInBranch,
    /// An `X`–`Y` edge closes `x x′ y′ y a`.
    FiveCrossEdge,
    /// `x′` and `y′` share a fresh vertex, closing `x x′ w y′ y`.
    FiveCommonVertex,
    ButterflyScan,
    /// `y`–`x` path of length 2 with the long butterfly path.
    SixReturnTwo,
    /// `y`–`x` path of length 3 avoiding `a` with the middle butterfly path.
    SixReturnThree,
    /// `y`–`x` path of length 4 through `X′ ∩ Y′` with the short butterfly path.
    SixReturnFour,
    PathLength3,
    PathLength4,
    PathLength5,
    /// Butterfly, greedy path, then a return path of the recorded length.
    LongCycle { return_length: usize },
    /// Length in `3..=6` handed to the specialised finder.
    Dispatched { ell: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FallbackOutcome {
    Found,
    Absent,
    BudgetExceeded,
}

/// What a finder did: the named sets it built, the branch it took, whether
/// the degree and order hypotheses held and whether it had to fall back.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FinderTrace {
    pub branch: Option<Branch>,
    pub sets: BTreeMap<String, VertexSet>,
    pub butterfly: Option<Butterfly>,
    pub degree_condition_met: bool,
    pub order_condition_met: bool,
    pub fallback_used: bool,
    pub fallback_outcome: Option<FallbackOutcome>,
    pub constants: Option<PathConstants>,
    /// Short description of the step that came up empty, if any.
    pub failed_step: Option<String>,
}

impl FinderTrace {
    fn new(degree_condition_met: bool, order_condition_met: bool) -> Self {
        FinderTrace { degree_condition_met, order_condition_met, ..Default::default() }
    }

    pub fn hypothesis_met(&self) -> bool {
        self.degree_condition_met && self.order_condition_met
    }

    fn record(&mut self, name: &str, set: &VertexSet) {
        self.sets.insert(name.to_string(), set.clone());
    }

    fn fail<T>(&mut self, step: &str) -> Option<T> {
        if self.failed_step.is_none() {
            self.failed_step = Some(step.to_string());
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FinderReport<W> {
    pub witness: Option<W>,
    pub trace: FinderTrace,
}

impl<W> FinderReport<W> {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinderOptions {
    /// Run the exact search when the constructive procedure fails.
    pub fallback: bool,
    pub budget: Budget,
}

impl Default for FinderOptions {
    fn default() -> Self {
        FinderOptions { fallback: true, budget: Budget::nodes(50_000_000) }
    }
}

fn check_vertex(g: &OrientedGraph, v: usize) -> Result<(), FinderError> {
    if v >= g.order() {
        Err(FinderError::OutOfRange { vertex: v, n: g.order() })
    } else {
        Ok(())
    }
}

fn check_oriented(g: &OrientedGraph, x: usize) -> Result<(), FinderError> {
    if !g.is_oriented() {
        return Err(FinderError::NotOriented);
    }
    check_vertex(g, x)
}

/// `δ⁰ ≥ ⌊n/3⌋ + 1`.
fn third_plus_one(g: &OrientedGraph) -> bool {
    g.min_semidegree() > g.order() / 3
}

/// Validates the constructive answer, then falls back to the exact search
/// through `x` if it is missing.
fn finish_cycle(
    g: &OrientedGraph,
    x: usize,
    ell: usize,
    proof: Option<Vec<usize>>,
    mut trace: FinderTrace,
    opts: &FinderOptions,
) -> FinderReport<CycleWitness> {
    if let Some(vertices) = proof {
        let witness = CycleWitness { vertices, through: Some(x) };
        match witness.validate(g) {
            Ok(()) if witness.len() == ell => return FinderReport { witness: Some(witness), trace },
            _ => {
                trace.fail::<()>("constructed cycle failed validation");
                trace.branch = None;
            }
        }
    }
    if !opts.fallback {
        return FinderReport { witness: None, trace };
    }
    trace.fallback_used = true;
    let outcome = has_cycle_exact(g, ell, Some(x), opts.budget).expect("arguments checked by caller");
    let (witness, tag) = match outcome {
        SearchOutcome::Found(w) => (Some(w), FallbackOutcome::Found),
        SearchOutcome::Absent => (None, FallbackOutcome::Absent),
        SearchOutcome::BudgetExceeded => (None, FallbackOutcome::BudgetExceeded),
    };
    trace.fallback_outcome = Some(tag);
    debug_assert!(witness.as_ref().map_or(true, |w| w.validate(g).is_ok()));
    FinderReport { witness, trace }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Mode;

    #[test]
    fn witness_validation() {
        let g = OrientedGraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)], Mode::Oriented)
            .unwrap();
        let ok = CycleWitness { vertices: vec![1, 2, 0], through: Some(0) };
        assert_eq!(ok.validate(&g), Ok(()));
        let missing = CycleWitness { vertices: vec![0, 2, 1], through: None };
        assert_eq!(missing.validate(&g), Err(WitnessError::MissingEdge(0, 2)));
        let repeated = CycleWitness { vertices: vec![0, 1, 0], through: None };
        assert_eq!(repeated.validate(&g), Err(WitnessError::Repeated(0)));
        let not_through = CycleWitness { vertices: vec![0, 1, 2], through: Some(3) };
        assert_eq!(not_through.validate(&g), Err(WitnessError::MissingThrough(3)));
        assert_eq!(validate_path(&g, &[0, 1, 2, 3]), Ok(()));
        assert_eq!(validate_path(&g, &[3, 2]), Err(WitnessError::MissingEdge(3, 2)));
    }
}
