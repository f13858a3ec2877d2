//! Connectedness of graphs and matroids through covering-based rough sets.
//!
//! A graph without isolated vertices induces a covering of its vertex set (one
//! block per edge). The graph is connected exactly when the covering upper
//! approximation has no nonempty proper fixpoint. A matroid induces a graph on
//! its ground set (elements sharing a circuit are adjacent) with the same
//! connectedness, and when the matroid is loopless with covering circuits the
//! circuits themselves give the same upper approximation.
//!
//! * [`set`]: universes, subsets, partitions.
//! * [`covering`]: set families, coverings, upper/lower approximation.
//! * [`graph`]: graphs, `C(G)`, incidence matrices, connectedness.
//! * [`matroid`]: circuit families, `G(M)`, connectedness, generators.
//! * [`oracle`]: brute-force references for cross-checking.
//! * [`format`]: text file formats.

pub mod covering;
pub mod error;
pub mod format;
pub mod graph;
pub mod matroid;
pub mod oracle;
pub mod set;

pub use covering::{validate_covering, Covering, CoveringValidation, CoveringViolation, SetFamily};
pub use error::Error;
pub use graph::{graph_from_incidence, verify_chain, Graph, IncidenceMatrix};
pub use matroid::{
    cycle_matroid, direct_sum, is_connected_matroid, uniform_matroid, validate_circuits, Axiom, AxiomViolation,
    CircuitFamily, CircuitValidation, Method, StepVerdict,
};
pub use set::{Partition, Subset, Universe};
