//! Fan-partitions of graphs and the lemma engine that builds them from
//! tree-decompositions of apex-minor-free graphs.

pub mod bounds;
pub mod decomp;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod io;
pub mod lemmas;
pub mod oracle;
pub mod partition;
pub mod rational;

pub use error::{BoundKind, Error, Result};
pub use graph::{Graph, VertexSet};
pub use rational::Rational;
