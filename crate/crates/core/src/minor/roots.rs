use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{Graph, VertexId, VertexSet};

/// Largest number of roots the exact engine accepts.
pub const MAX_ROOTS: usize = 8;

/// An ordered list of distinct roots `x_1 .. x_k`, `2 <= k <= MAX_ROOTS`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct RootSequence(Vec<VertexId>);

impl RootSequence {
    pub fn new(roots: Vec<VertexId>) -> Result<Self> {
        if roots.len() < 2 {
            return Err(Error::domain(format!("a root sequence needs at least 2 roots, got {}", roots.len())));
        }
        if roots.len() > MAX_ROOTS {
            return Err(Error::Unsupported(format!("{} roots exceeds the engine limit of {MAX_ROOTS}", roots.len())));
        }
        let mut sorted = roots.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::domain(format!("root {} repeated", w[0])));
        }
        Ok(RootSequence(roots))
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> VertexId {
        self.0[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn to_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    pub fn validate_in(&self, g: &Graph) -> Result<()> {
        self.0.iter().try_for_each(|&v| g.check_vertex(v))
    }

    /// `x_{1+r}, x_{2+r}, ...`.
    pub fn rotated(&self, r: usize) -> RootSequence {
        let k = self.0.len();
        RootSequence((0..k).map(|i| self.0[(i + r) % k]).collect())
    }

    pub fn reversed(&self) -> RootSequence {
        RootSequence(self.0.iter().rev().copied().collect())
    }

    /// Representative of the dihedral class: smallest root first, then the
    /// direction whose second entry is smaller than its last.
    pub fn canonical(&self) -> RootSequence {
        let k = self.0.len();
        let start = (0..k).min_by_key(|&i| self.0[i]).expect("nonempty");
        let rot = self.rotated(start);
        if k > 2 && rot.0[1] > rot.0[k - 1] {
            rot.reversed().rotated(k - 1)
        } else {
            rot
        }
    }

    /// All `2k` rotations and reflections.
    pub fn dihedral_images(&self) -> Vec<RootSequence> {
        let k = self.0.len();
        let rev = self.reversed();
        (0..k).flat_map(|r| [self.rotated(r), rev.rotated(r)]).collect()
    }
}

impl TryFrom<Vec<VertexId>> for RootSequence {
    type Error = Error;

    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        RootSequence::new(v)
    }
}

impl From<RootSequence> for Vec<VertexId> {
    fn from(r: RootSequence) -> Self {
        r.0
    }
}

/// Cyclic orders of `x` up to rotation and reflection, in lexicographic
/// order: `(k-1)!/2` of them for `k >= 3`, one for `k = 2`.
pub fn canonical_orders(x: &VertexSet) -> Result<Vec<RootSequence>> {
    let members = x.to_vec();
    if members.len() < 2 {
        return Err(Error::domain("canonical orders need at least 2 vertices"));
    }
    if members.len() > MAX_ROOTS {
        return Err(Error::Unsupported(format!("{} roots exceeds the engine limit of {MAX_ROOTS}", members.len())));
    }
    let first = members[0];
    let rest = &members[1..];
    let mut out = Vec::new();
    let mut used = vec![false; rest.len()];
    let mut cur = vec![first];
    fn permute(rest: &[VertexId], used: &mut [bool], cur: &mut Vec<VertexId>, out: &mut Vec<RootSequence>) {
        if cur.len() == rest.len() + 1 {
            if cur.len() <= 2 || cur[1] < cur[cur.len() - 1] {
                out.push(RootSequence(cur.clone()));
            }
            return;
        }
        for i in 0..rest.len() {
            if !used[i] {
                used[i] = true;
                cur.push(rest[i]);
                permute(rest, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    permute(rest, &mut used, &mut cur, &mut out);
    Ok(out)
}
