//! Separations, vertex-disjoint paths and the lambda-massed conditions.

mod massed;
mod menger;
mod separation;

pub use massed::{is_massed, is_massed_with, parse_lambda, Lambda, MassedReport, SEPARATOR_BUDGET};
pub use menger::{disjoint_paths, menger, min_root_separation, FlowResult, MengerOutcome, PathSystem};
pub use separation::{is_rigid, Separation};
