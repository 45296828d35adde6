//! Exact Castelnuovo–Mumford regularity of graphs.
//!
//! The regularity of a graph `G` is the largest `j` such that some induced
//! subgraph `G[S]` has nonvanishing reduced homology `H̃_{j-1}` in its
//! independence complex. This crate computes it exactly over a prime field,
//! together with the combinatorial invariants that bound it (induced
//! matching number, cochordal cover number, decycling number, the graph
//! `G*` of induced `2K_2`'s) and the graph rewrites that shift it (Lozin's
//! transformation, triple subdivision, whiskers).
//!
//! The [`verify`] module checks the relationships between all of these on
//! generated and enumerated graph corpora.

pub mod cli;
pub mod error;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod regularity;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, NamedFamily, VertexSet};
pub use homology::{BettiVector, Field};
pub use regularity::{regularity, RegResult, RegStrategy, Strategy};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeSnippets;
