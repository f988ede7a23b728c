//! Exact solvers built on minimal separators and potential maximal cliques.
//!
//! The dynamic programs here run in polynomial time on any graph class with
//! polynomially many minimal separators:
//!
//! * [`dp_treewidth`]: maximum induced subgraph of treewidth at most `t`
//!   (maximum independent set for `t = 0`, maximum induced forest for `t = 1`);
//! * [`dp_connected`]: the same with `G - F` required to be connected, which
//!   yields connected vertex cover and connected feedback vertex set on
//!   chordal and circular-arc graphs;
//! * [`reductions`]: distance-`d` independent set through graph powers, and
//!   the red-blue dominating set to connected vertex cover construction.
//!
//! [`oracle`] holds exhaustive baselines that share nothing with the solvers
//! beyond [`Graph`] itself.

pub mod classes;
pub mod decomposition;
pub mod dp_connected;
pub mod dp_treewidth;
pub mod error;
pub mod graph;
pub mod minsep;
pub mod oracle;
pub mod reductions;
pub mod vertex_set;

pub use decomposition::{Block, Budget, Decomposition, GoodTriple};
pub use error::{Error, Result};
pub use graph::Graph;
pub use minsep::SeparatorSet;
pub use vertex_set::{VertexSet, CAPACITY};
