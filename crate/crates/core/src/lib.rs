//! Open-neighbourhood locating-dominating (OLD) sets in digraphs with loops.
//!
//! The crate computes `γ_OL`, recognises extremal digraphs (`γ_OL = n`)
//! through their forcing structure, builds every extremal digraph from a
//! blueprint, enumerates the extremal tree family recursively and checks
//! the structural claims exhaustively on small orders.

pub mod canon;
pub mod construct;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod figures;
pub mod forcing;
pub mod gallery;
pub mod io;
pub mod solver;
pub mod trees;
pub mod verify;
pub mod vertex_set;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use construct::{
    construct_from_blueprint, decompose_to_blueprint, validate_blueprint, ExtremalBlueprint,
};
pub use digraph::{Classification, Digraph, SimpleGraph};
pub use error::{ConstructError, GraphError, ParseError, ParseErrorKind};
pub use forcing::{forced_report, forcing_arcs, ForcedReport, ForcingDecomposition};
pub use solver::{greedy_old_upper_bound, is_extremal, is_locatable, is_old_set, min_old_set, OldResult};
pub use vertex_set::{VertexSet, MAX_ORDER};
pub use verify::{verify, Claim, VerificationReport, VerifyOptions};
pub use trees::{check_tree_lemmas, enumerate_t_n, oracle_t_n, TreeCatalog};
