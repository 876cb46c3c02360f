//! Exact tools for rooted cycle minors.
//!
//! * [`Graph`] and [`VertexSet`]: simple graphs over stable identifiers with
//!   the counting primitives `e(X, Y)`, `rho(X)` and `N(X)`.
//! * [`minor`]: exact search for cycle minors rooted at an ordered sequence,
//!   certificate verification and cycle-linkedness.
//! * [`connectivity`]: vertex-disjoint paths, minimum separations, rigidity
//!   and the lambda-massed conditions.
//! * [`reducer`]: a constructive solver that shrinks 5-massed instances by
//!   separation splitting and edge contraction, builds models inside dense
//!   closed neighborhoods, and lifts them back.
//! * [`extremal`]: generator and recognizer for the 5-massed, non-linked
//!   obstruction family built around an apex pair.

pub mod connectivity;
pub mod error;
pub mod exec;
pub mod extremal;
mod graph;
pub mod io;
pub mod minor;
pub mod reducer;
mod vertex_set;

pub type VertexId = u32;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{ContractionTrace, Graph};
pub use vertex_set::VertexSet;
