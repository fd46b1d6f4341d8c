//! Exhaustive searches used as ground truth: exact cycle and pattern search,
//! closed-walk decision, labelled enumeration of small oriented graphs,
//! semidegree threshold cells, the digraph density formula and the random
//! half-split experiment.

mod cycles;
mod enumerate;
mod matrix;
mod split;
mod threshold;

use std::cell::Cell;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cycles::{contains_pattern, has_cycle_exact, shortest_cycle};
pub use enumerate::{enumerate_oriented, pair_count, OrientedEnumerator, MAX_ENUMERATION_ORDER};
pub use matrix::{closed_walk_witness, has_closed_walk, BitMatrix};
pub use split::{random_split_experiment, SplitExperimentConfig, SplitReport, SplitTarget};
pub use threshold::{
    ex_di_brute, ex_di_formula, threshold_search, Provenance, ThresholdOptions, ThresholdRecord,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("length {0} is not supported here")]
    BadLength(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("order {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("random splits need an even order, got {0}")]
    OddOrder(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// Result of a search that may be abandoned.
///
/// `BudgetExceeded` means nothing was decided; it is never a stand-in for
/// `Absent`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "witness", rename_all = "kebab-case")]
pub enum SearchOutcome<T> {
    Found(T),
    Absent,
    BudgetExceeded,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, SearchOutcome::Absent)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::Absent => SearchOutcome::Absent,
            SearchOutcome::BudgetExceeded => SearchOutcome::BudgetExceeded,
        }
    }
}

/// Cap on the number of search-tree nodes a backtracking search may expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub const fn unlimited() -> Self {
        Budget { max_nodes: None }
    }

    pub const fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes: Some(max_nodes) }
    }

    pub(crate) fn meter(self) -> Meter {
        Meter { left: Cell::new(self.max_nodes.unwrap_or(u64::MAX)) }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

pub(crate) struct Meter {
    left: Cell<u64>,
}

impl Meter {
    /// Charges one node; `false` once the budget is spent.
    pub(crate) fn tick(&self) -> bool {
        let left = self.left.get();
        if left == 0 {
            return false;
        }
        self.left.set(left - 1);
        true
    }
}
