use super::Step;
use crate::error::{Error, Result};
use crate::minor::{find_rooted_cycle_minor, verify_model, MinorModel, RootSequence};
use crate::{Graph, VertexId, VertexSet};

/// Carries a model of the instance after `step` back to `pre`, the instance
/// before it. The result is verified in `pre`.
pub fn lift_model(pre: &Graph, seq: &RootSequence, m: &MinorModel, step: &Step) -> Result<MinorModel> {
    let lifted = match step {
        Step::Contraction { u, v } => {
            let mut out = m.clone();
            for set in &mut out.branch_sets {
                if set.contains(*u) {
                    set.insert(*v);
                }
            }
            out
        }
        Step::SeparationSplit { separation } => lift_through_split(pre, m, &separation.b, &separation.separator())?,
        Step::DenseConstruction { .. } | Step::FallbackSearch => m.clone(),
    };
    let verdict = verify_model(pre, seq, &lifted);
    match verdict.violation {
        None => Ok(lifted),
        Some(v) => Err(Error::Internal(format!("lift through {step:?} failed: {v}"))),
    }
}

/// Replaces the virtual clique on `s` by a rooted cycle (or path) minor of
/// `G[b]`: the separator is ordered so that vertices of one branch set are
/// consecutive and branch sets follow the model's cyclic order, and each
/// branch set absorbs the pieces rooted at its separator vertices. Pieces of
/// unused separator vertices join the last used branch set.
fn lift_through_split(pre: &Graph, m: &MinorModel, b: &VertexSet, s: &VertexSet) -> Result<MinorModel> {
    let mut order: Vec<VertexId> = Vec::with_capacity(s.len());
    let mut owner: Vec<Option<usize>> = Vec::with_capacity(s.len());
    for (i, set) in m.branch_sets.iter().enumerate() {
        for v in set.intersection(s).iter() {
            order.push(v);
            owner.push(Some(i));
        }
    }
    if order.is_empty() {
        return Ok(m.clone());
    }
    let last = owner.last().copied().flatten();
    for v in s.iter() {
        if !order.contains(&v) {
            order.push(v);
            owner.push(last);
        }
    }
    let mut out = m.clone();
    if order.len() == 1 {
        return Ok(out);
    }
    let side = pre.induced(b)?;
    let seq = RootSequence::new(order)?;
    let pieces = find_rooted_cycle_minor(&side, &seq)?
        .ok_or_else(|| Error::Internal(format!("far side has no minor rooted at {:?}", seq.as_slice())))?;
    for (piece, own) in pieces.branch_sets.iter().zip(owner) {
        if let Some(i) = own {
            out.branch_sets[i].union_with(piece);
        }
    }
    Ok(out)
}
