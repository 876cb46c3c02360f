use serde::Serialize;

use super::{canonical_orders, find_rooted_cycle_minor, MinorModel, RootSequence, MAX_ROOTS};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderWitness {
    pub order: RootSequence,
    pub model: MinorModel,
}

/// Outcome of a cycle-linkedness test. Orders are tried in canonical
/// (lexicographic) order; on failure `witnesses` holds the orders before the
/// first failing one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleLinkReport {
    pub linked: bool,
    pub witnesses: Vec<OrderWitness>,
    pub failing_order: Option<RootSequence>,
}

pub fn is_cycle_linked(g: &Graph, x: &VertexSet) -> Result<CycleLinkReport> {
    is_cycle_linked_with(g, x, Exec::default())
}

pub fn is_cycle_linked_with(g: &Graph, x: &VertexSet, exec: Exec) -> Result<CycleLinkReport> {
    g.check_set(x)?;
    match x.len() {
        0 => return Err(Error::domain("cycle-linkedness needs at least one vertex")),
        1 => return Ok(CycleLinkReport { linked: true, witnesses: Vec::new(), failing_order: None }),
        n if n > MAX_ROOTS => {
            return Err(Error::Unsupported(format!("{n} roots exceeds the engine limit of {MAX_ROOTS}")))
        }
        _ => {}
    }
    let orders = canonical_orders(x)?;
    let answers: Vec<Result<Option<MinorModel>>> = match exec {
        Exec::Sequential => {
            let mut out = Vec::with_capacity(orders.len());
            for o in &orders {
                let r = find_rooted_cycle_minor(g, o);
                let stop = !matches!(r, Ok(Some(_)));
                out.push(r);
                if stop {
                    break;
                }
            }
            out
        }
        Exec::Parallel => exec.map(&orders, |o| find_rooted_cycle_minor(g, o)),
    };
    let mut witnesses = Vec::new();
    for (order, ans) in orders.into_iter().zip(answers) {
        match ans? {
            Some(model) => witnesses.push(OrderWitness { order, model }),
            None => return Ok(CycleLinkReport { linked: false, witnesses, failing_order: Some(order) }),
        }
    }
    Ok(CycleLinkReport { linked: true, witnesses, failing_order: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::verify_model;

    #[test]
    fn complete_graph_is_linked() {
        let g = Graph::complete(7);
        let x: VertexSet = [0, 2, 3, 5, 6].iter().collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            let r = is_cycle_linked_with(&g, &x, exec).unwrap();
            assert!(r.linked);
            assert_eq!(r.witnesses.len(), 12);
            assert!(r.failing_order.is_none());
            assert!(r.witnesses.iter().all(|w| verify_model(&g, &w.order, &w.model).ok));
        }
    }

    #[test]
    fn five_cycle_is_not_linked() {
        let g = Graph::cycle(&[1, 2, 3, 4, 5]).unwrap();
        let r = is_cycle_linked(&g, g.vertex_set()).unwrap();
        assert!(!r.linked);
        // 1,2,3,4,5 is fine; the first failing canonical order is 1,2,3,5,4
        assert_eq!(r.witnesses.len(), 1);
        let fail = r.failing_order.unwrap();
        assert_eq!(fail.as_slice(), &[1, 2, 3, 5, 4]);
        // only the identity class embeds; 1,3,5,2,4 fails like every other order
        let alt = RootSequence::new(vec![1, 3, 5, 2, 4]).unwrap();
        assert!(find_rooted_cycle_minor(&g, &alt).unwrap().is_none());
    }

    #[test]
    fn small_sets() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_cycle_linked(&g, &[0, 1].iter().collect()).unwrap().linked);
        assert!(!is_cycle_linked(&g, &[0, 2].iter().collect()).unwrap().linked);
        assert!(is_cycle_linked(&g, &VertexSet::singleton(3)).unwrap().linked);
        assert!(is_cycle_linked(&g, &VertexSet::new()).is_err());
        let big = Graph::complete(10);
        assert!(matches!(is_cycle_linked(&big, &(0..9).collect()), Err(Error::Unsupported(_))));
    }
}
