//! Recognition, exact coloring, and constructive ω-coloring for graphs with
//! no induced claw `K1,3` and no induced `(K2 ∪ K1) + K2`.
//!
//! In this class every graph satisfies `ω ≤ χ ≤ ω + 1`, and `χ = ω` as soon
//! as `Δ ≤ 2ω − 3`. The crate decides membership ([`recognition`]), computes
//! ω and χ exactly ([`clique`], [`coloring`]), builds ω-colorings through
//! Kempe-style repair ([`colorer`], [`kempe`]), reports the degree
//! trichotomy ([`report`]), and sweeps small graphs to check all of it
//! ([`stress`]).

pub mod clique;
pub mod colorer;
pub mod coloring;
pub mod dimacs;
mod error;
pub mod generators;
pub mod graph;
pub mod kempe;
pub mod recognition;
pub mod report;
pub mod stress;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
