use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::minor::is_cycle_linked;
use crate::{Graph, VertexSet};

/// An ordered pair `(A, B)` with `A ∪ B = V(G)` and no edge between `A \ B`
/// and `B \ A`. Its order is `|A ∩ B|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Separation {
    pub fn new(a: VertexSet, b: VertexSet) -> Self {
        Separation { a, b }
    }

    /// The separation `(V \ side, side ∪ separator)`.
    pub fn from_side(g: &Graph, separator: &VertexSet, side: &VertexSet) -> Self {
        let b = side.union(separator);
        let a = g.vertex_set().difference(side);
        Separation { a, b }
    }

    pub fn separator(&self) -> VertexSet {
        self.a.intersection(&self.b)
    }

    pub fn order(&self) -> usize {
        self.a.intersection_len(&self.b)
    }

    pub fn a_only(&self) -> VertexSet {
        self.a.difference(&self.b)
    }

    pub fn b_only(&self) -> VertexSet {
        self.b.difference(&self.a)
    }

    /// Checks the separation axioms in `g`, and `x ⊆ A` when `x` is given.
    pub fn check(&self, g: &Graph, x: Option<&VertexSet>) -> std::result::Result<(), String> {
        if self.a.union(&self.b) != *g.vertex_set() {
            return Err("A ∪ B is not the vertex set".into());
        }
        let b_only = self.b_only();
        if let Some(v) = self.a_only().iter().find(|&v| !g.neighbors(v).is_disjoint(&b_only)) {
            return Err(format!("vertex {v} in A \\ B has a neighbor in B \\ A"));
        }
        if let Some(x) = x {
            if !x.is_subset(&self.a) {
                return Err("roots are not contained in A".into());
            }
        }
        Ok(())
    }
}

impl Serialize for Separation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Separation", 4)?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("b", &self.b)?;
        st.serialize_field("separator", &self.separator())?;
        st.serialize_field("order", &self.order())?;
        st.end()
    }
}

/// A separation of `(g, x)` is rigid when `B \ A` is nonempty and
/// `(G[B], A ∩ B)` is cycle-linked. An empty separator is never cycle-linked.
pub fn is_rigid(g: &Graph, x: &VertexSet, sep: &Separation) -> Result<bool> {
    sep.check(g, Some(x)).map_err(Error::Domain)?;
    if sep.b_only().is_empty() {
        return Ok(false);
    }
    let s = sep.separator();
    if s.is_empty() {
        return Ok(false);
    }
    let side = g.induced(&sep.b)?;
    Ok(is_cycle_linked(&side, &s)?.linked)
}
