//! Closed walks of prescribed length, reachable-set growth, and the
//! arbitrary-orientation pipeline: cycle-type, target walk shapes and their
//! greedy embedding.

mod closed;
mod embed;
mod growth;
mod pattern;

use thiserror::Error;

pub use closed::{closed_walk_of_length, winding_plan, ClosedWalkWitness, WalkStrategy, WindingPlan};
pub use embed::{embed_walk_greedy, EmbedError};
pub use growth::{grow_reachable, GrowthReport, StopReason};
pub use pattern::{
    cycle_type, is_prime_power, pattern_to_walk, smallest_nondivisor, CyclePattern, Gadget,
    ShapeKind, Step, WalkShape,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("pattern of length {0} is too short; cycles need at least 3 edges")]
    PatternTooShort(usize),
    #[error("unexpected letter {0:?} in pattern; use f and b")]
    BadLetter(char),
    #[error("length {ell} cannot be wound from cycles of lengths {} and {}", t + 1, t + 2)]
    NoPlan { ell: usize, t: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
}
