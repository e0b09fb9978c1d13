//! Integer additive set-sequential labelings of finite simple graphs.
//!
//! A vertex labeling `f` assigns each vertex a non-empty subset of a ground
//! set `X ⊆ ℕ₀`; an edge `uv` inherits the sum set `f(u) + f(v)`. The crate
//! decides the resulting family of predicates (IASL, IASI, IASGL, IASSL,
//! IASSI), builds witnesses for any `X` containing 0, searches small graphs
//! exhaustively, and audits structural claims against concrete
//! instances.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod audit;
pub mod classify;
pub mod cli;
pub mod construct;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod search;
pub mod sets;
pub mod verify;

pub use classify::{
    classify_powerset, is_nontrivial_summand, is_nontrivial_sumset, nontrivial_decompositions,
    PowersetClassification,
};
pub use error::{Error, Result};
pub use graph::{Edge, FStarImage, Graph, LabeledGraph};
pub use sets::{sumset, GroundSet, LabelSet};
pub use verify::{Predicate, VerificationReport};
