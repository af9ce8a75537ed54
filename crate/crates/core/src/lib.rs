//! Structural analysis of chordal graphs.

pub mod clique_tree;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod minmax;
pub mod oracle;
pub mod reversible;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, VertexOrdering, VertexSet};
