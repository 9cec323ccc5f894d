//! Bialgebras and Hopf algebras of oriented Feynman graphs.
//!
//! Graphs are oriented multigraphs with typed internal edges and typed,
//! oriented external legs. The crate provides canonical forms, covering
//! subgraphs and contractions, the free commutative algebra on connected
//! graphs with exact rational coefficients, the covering-subgraph and
//! admissible-cut coproducts with their antipodes and coaction, and a law
//! checker that verifies the algebraic identities on generated corpora.

pub mod algebra;
pub mod canon;
pub mod checker;
pub mod coproduct;
pub mod error;
pub mod graph;
pub mod io;
pub mod partition;

pub use algebra::{rational, AlgebraElement, Combination, Mode, Monomial, Rational, Tensor};
pub use canon::{are_isomorphic, canonical_form, canonical_key, CanonicalKey};
pub use coproduct::{
    antipode, coproduct, counit, cut_coproduct, CoalgebraConfig, Coaction, CoverCoalgebra, CutCoalgebra, Grading,
};
pub use error::{Error, Result};
pub use graph::{Direction, EdgeId, EdgeType, GraphBuilder, OrientedGraph, VertexId};
pub use partition::{AdmissibleCut, CoverVariant, ExternalPolicy, VertexPartition};
