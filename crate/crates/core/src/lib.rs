//! Regular graphs with prescribed chromatic number.
//!
//! An `(r|χ)`-graph is an `r`-regular graph with chromatic number `χ`. This
//! crate builds the known families of such graphs (Turán graphs, antiholes,
//! complements of cycle unions, Cayley graphs on abelian groups and several
//! Turán-derived modifications), computes exact invariants with certificates,
//! evaluates closed-form bounds on the least order `n(r|χ)`, and certifies
//! that order for small parameters by exhaustive enumeration of regular
//! graphs up to isomorphism.

pub mod bounds;
pub mod canon;
pub mod cayley;
pub mod census;
pub mod chromatic;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod table;

pub use canon::{canonical_form, is_isomorphic, is_vertex_transitive, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{cartesian_product, disjoint_union, Graph, GraphBuilder};
pub use graph6::{decode_graph6, encode_dot, encode_graph6};
