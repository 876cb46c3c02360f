//! Rooted cycle minors: root sequences, models and their verification, the
//! exact search engine and cycle-linkedness.

mod linked;
mod model;
mod roots;
mod search;

pub use linked::{is_cycle_linked, is_cycle_linked_with, CycleLinkReport, OrderWitness};
pub use model::{minimize_model, verify_model, MinorModel, Verdict, Violation};
pub use roots::{canonical_orders, RootSequence, MAX_ROOTS};
pub use search::{find_rooted_cycle_minor, find_rooted_cycle_minor_with_stats, path_exists, SearchStats, MAX_VERTICES};
