//! Cyclic interval edge colorings and cyclic deficiency.
//!
//! The crate is organised bottom-up: [`graph`] and [`edgelist`] hold the
//! data types, [`cyclic`] the deficiency metric, [`families`] the named graph
//! constructions, [`colorers`] the constructive colorings, [`exact`] the
//! backtracking solver and [`bounds`] the closed-form estimates.

pub mod error;
pub mod graph;
pub mod edgelist;
pub mod cyclic;
pub mod families;
pub mod colorers;
pub mod exact;
pub mod bounds;
pub mod random;
pub mod json;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Matching, Multigraph, VertexId};
pub use cyclic::{DeficiencyReport, EdgeColoring};
