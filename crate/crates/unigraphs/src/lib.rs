//! Exact algorithms for unigraphs and their hereditary closure: Tyshkevich decomposition,
//! degree-sequence and cross-degree machinery, Rao containment, class membership tests and
//! the search for minimal forbidden induced subgraphs.

pub mod canon;
pub mod classify;
pub mod degseq;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod induced;
pub mod realize;
pub mod search;
pub mod split;
pub mod tyshkevich;

pub use canon::CanonicalForm;
pub use degseq::{rao_contains, DegreeSequence, SequenceComponent, SequenceDecomposition};
pub use error::{Error, Result};
pub use graph::Graph;
pub use split::{ks_partitions, CrossDegreePair, KSPartition, Side};
pub use tyshkevich::{compose, decompose, recompose, Component, Decomposition};
