use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::VertexId;

/// A set of vertex identifiers backed by a dense bitset.
///
/// Equality, hashing and ordering look only at the members, never at the
/// allocated capacity, so sets built against graphs of different sizes
/// compare as expected. Ordering is lexicographic on the ascending member list.
#[derive(Clone, Default)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(FixedBitSet::new())
    }

    pub fn with_capacity(cap: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(cap))
    }

    pub fn singleton(v: VertexId) -> Self {
        let mut s = Self::with_capacity(v as usize + 1);
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        let i = v as usize;
        if i >= self.0.len() {
            self.0.grow(i + 1);
        }
        !self.0.put(i)
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        let i = v as usize;
        if i >= self.0.len() {
            return false;
        }
        let was = self.0.contains(i);
        self.0.set(i, false);
        was
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(v as usize)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.ones().map(|i| i as VertexId)
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<VertexId> {
        self.iter().next()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.0.difference_with(&other.0);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.0.intersection_count(&other.0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a VertexId>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl Extend<VertexId> for VertexSet {
    fn extend<I: IntoIterator<Item = VertexId>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.iter().eq(other.iter())
    }
}

impl Eq for VertexSet {}

impl Hash for VertexSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for v in self.iter() {
            v.hash(state);
        }
        self.len().hash(state);
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<VertexId>::deserialize(deserializer)?;
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_ignores_capacity() {
        let mut a = VertexSet::with_capacity(200);
        a.insert(3);
        a.insert(7);
        let b: VertexSet = [7, 3].iter().collect();
        assert_eq!(a, b);
        assert_eq!(a.cmp(&b), Ordering::Equal);
    }

    #[test]
    fn ordering_is_lexicographic_on_members() {
        let a: VertexSet = [1, 5].iter().collect();
        let b: VertexSet = [1, 6].iter().collect();
        let c: VertexSet = [2].iter().collect();
        assert!(a < b);
        assert!(b < c);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1, 2, 3, 90].iter().collect();
        let b: VertexSet = [2, 3, 4].iter().collect();
        assert_eq!(a.intersection(&b).to_vec(), vec![2, 3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 90]);
        assert_eq!(b.union(&a).len(), 5);
        assert_eq!(a.intersection_len(&b), 2);
        assert!(!a.is_disjoint(&b));
        assert!(VertexSet::singleton(4).is_subset(&b));
        let mut c = a.clone();
        assert!(c.remove(90));
        assert!(!c.remove(1000));
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn serde_as_sorted_list() {
        let a: VertexSet = [9, 1, 4].iter().collect();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[1,4,9]");
        let back: VertexSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
