//! Cycles of prescribed length in oriented graphs.
//!
//! The crate has three layers. [`graph`] holds the bitset-backed oriented
//! graph. [`constructions`], [`finders`] and [`walks`] build extremal examples
//! and find cycles, paths, butterflies and closed walks constructively. Every
//! constructive answer can be checked against the exhaustive searches in
//! [`oracle`].

pub mod constructions;
pub mod finders;
pub mod graph;
pub mod oracle;
pub mod rng;
pub mod walks;

pub use finders::CycleWitness;
pub use graph::{Mode, OrientedGraph, VertexSet};
pub use oracle::{Budget, SearchOutcome};
