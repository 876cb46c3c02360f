use serde::Serialize;

use crate::connectivity::Separation;
use crate::error::{Error, Result};
use crate::{ContractionTrace, Graph, VertexId, VertexSet};

/// One reduction on the path from the input instance to the level where the
/// answer was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Step {
    /// `G/uv`; the merged vertex keeps the identifier `u`.
    Contraction { u: VertexId, v: VertexId },
    /// `G[A]` with `A ∩ B` made complete.
    SeparationSplit { separation: Separation },
    /// A model assembled inside `G[N[apex]]`; the graph is unchanged.
    DenseConstruction { apex: VertexId, vertices: VertexSet, template: String },
    /// Exact search on the current instance; the graph is unchanged.
    FallbackSearch,
}

impl Step {
    /// The instance after this step.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match self {
            Step::Contraction { u, v } => g.contract(*u, *v, &mut ContractionTrace::new()),
            Step::SeparationSplit { separation } => {
                separation.check(g, None).map_err(Error::Domain)?;
                let mut reduced = g.induced(&separation.a)?;
                reduced.make_clique(&separation.separator());
                Ok(reduced)
            }
            Step::DenseConstruction { .. } | Step::FallbackSearch => Ok(g.clone()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
}

impl ReductionTrace {
    /// Replays every step from `g`, returning the final instance and the
    /// combined contraction bookkeeping.
    pub fn replay(&self, g: &Graph) -> Result<(Graph, ContractionTrace)> {
        let mut cur = g.clone();
        let mut merged = ContractionTrace::new();
        for step in &self.steps {
            if let Step::Contraction { u, v } = step {
                cur = cur.contract(*u, *v, &mut merged)?;
            } else {
                cur = step.apply(&cur)?;
            }
        }
        Ok((cur, merged))
    }
}
