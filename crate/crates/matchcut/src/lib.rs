//! Enumeration of matching cuts — edge cuts that are also matchings — in
//! undirected graphs.
//!
//! The crate provides:
//!
//! - a graph core with canonical cut representation ([`graph`]),
//! - reference enumerators: an exhaustive bipartition oracle and a
//!   spanning-forest stream whose output size is bounded by Fibonacci
//!   numbers ([`enumerate`]),
//! - enumeration kernels parameterized by vertex cover, twin cover,
//!   neighborhood diversity, modular width, feedback edge number, and
//!   clique partition size ([`kernel`]), each paired with a lifting stage
//!   that maps kernel solutions back to solutions of the input graph,
//! - instance generators for extremal and parameterized families
//!   ([`generate`]), and
//! - a cross-validation harness that checks every kernel+lift pipeline
//!   against the oracle ([`verify`]).
//!
//! The `examples/` directory demonstrates each capability end to end; the
//! thin `matchcut` binary exposes the same operations on graph files.

pub mod enumerate;
pub mod error;
pub mod fileio;
pub mod generate;
pub mod graph;
pub mod kernel;
pub mod params;
pub mod verify;

pub use enumerate::{
    count_mc, enum_forest_matchings, fib, filter_extreme, oracle_enum, spanning_tree_enum,
    CutStream, MatchingConstraints, SolutionKind,
};
pub use error::{Error, Result};
pub use graph::{build_graph, Cut, Graph, VertexSet};
