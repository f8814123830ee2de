//! Canonical cycle form and sets of equal-length cycles.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

/// A cycle as a vertex sequence in canonical form: the minimum vertex
/// first, and the smaller of its two cycle neighbors second.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cycle edges, normalized and sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let k = self.0.len();
        let mut out: Vec<Edge> = (0..k)
            .map(|i| edge(self.0[i], self.0[(i + 1) % k]))
            .collect();
        out.sort_unstable();
        out
    }

    /// True if consecutive vertices (cyclically) are adjacent in `g`.
    pub fn is_cycle_of(&self, g: &Graph) -> bool {
        let k = self.0.len();
        self.0.iter().all(|&v| v < g.n())
            && (0..k).all(|i| g.has_edge(self.0[i], self.0[(i + 1) % k]))
    }

    /// Canonical form of a sequence already known to hold distinct
    /// vertices; used on enumerator hot paths.
    pub(crate) fn from_distinct(seq: &[usize]) -> Cycle {
        let k = seq.len();
        let (start, _) = seq
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .expect("nonempty");
        let next = seq[(start + 1) % k];
        let prev = seq[(start + k - 1) % k];
        let out = if next < prev {
            (0..k).map(|i| seq[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| seq[(start + k - i) % k]).collect()
        };
        Cycle(out)
    }
}

/// Canonicalizes a cyclic vertex sequence.
///
/// A closing repeat of the first vertex is allowed and dropped. The
/// result starts at the minimum vertex and is oriented so that its
/// second entry is smaller than its last.
pub fn canonical_cycle(seq: &[usize]) -> Result<Cycle> {
    let seq = match seq {
        [first, .., last] if seq.len() > 3 && first == last => &seq[..seq.len() - 1],
        _ => seq,
    };
    if seq.len() < 3 {
        return Err(Error::NotACycle(format!(
            "needs at least 3 vertices, got {}",
            seq.len()
        )));
    }
    let distinct: BTreeSet<usize> = seq.iter().copied().collect();
    if distinct.len() != seq.len() {
        return Err(Error::NotACycle(format!("repeated vertex in {seq:?}")));
    }
    Ok(Cycle::from_distinct(seq))
}

/// Distinct cycles that all share one length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CycleSet {
    length: usize,
    cycles: BTreeSet<Cycle>,
}

impl CycleSet {
    pub fn new(length: usize) -> Self {
        CycleSet {
            length,
            cycles: BTreeSet::new(),
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cycle> {
        self.cycles.iter()
    }

    pub fn contains(&self, c: &Cycle) -> bool {
        self.cycles.contains(c)
    }

    /// Inserts a cycle of the set's length; returns false for duplicates.
    pub fn insert(&mut self, c: Cycle) -> Result<bool> {
        if c.len() != self.length {
            return Err(Error::NotACycle(format!(
                "length {} does not match set length {}",
                c.len(),
                self.length
            )));
        }
        Ok(self.cycles.insert(c))
    }

    /// Keeps the longest cycles seen so far: a longer cycle replaces the
    /// set, a shorter one is ignored.
    pub(crate) fn offer(&mut self, c: Cycle) {
        use std::cmp::Ordering::*;
        match c.len().cmp(&self.length) {
            Greater => {
                self.length = c.len();
                self.cycles.clear();
                self.cycles.insert(c);
            }
            Equal => {
                self.cycles.insert(c);
            }
            Less => {}
        }
    }
}

impl<'a> IntoIterator for &'a CycleSet {
    type Item = &'a Cycle;
    type IntoIter = std::collections::btree_set::Iter<'a, Cycle>;

    fn into_iter(self) -> Self::IntoIter {
        self.cycles.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rotation_only() {
        assert_eq!(canonical_cycle(&[3, 1, 2]).unwrap().vertices(), &[1, 2, 3]);
    }

    #[test]
    fn reflection_applied() {
        assert_eq!(canonical_cycle(&[1, 3, 2]).unwrap().vertices(), &[1, 2, 3]);
    }

    #[test]
    fn closing_repeat_is_dropped() {
        let a = canonical_cycle(&[4, 5, 6, 7, 4]).unwrap();
        assert_eq!(a.vertices(), &[4, 5, 6, 7]);
    }

    #[test]
    fn forward_and_backward_reading_agree() {
        let fwd: Vec<usize> = (1..=18).collect();
        let back: Vec<usize> = fwd.iter().rev().copied().collect();
        assert_eq!(
            canonical_cycle(&fwd).unwrap(),
            canonical_cycle(&back).unwrap()
        );
    }

    #[test]
    fn rejects_non_cycles() {
        assert!(canonical_cycle(&[1, 2]).is_err());
        assert!(canonical_cycle(&[1, 2, 1, 3]).is_err());
        assert!(canonical_cycle(&[]).is_err());
    }

    #[test]
    fn edges_and_membership() {
        let c = canonical_cycle(&[0, 1, 2, 3]).unwrap();
        assert_eq!(c.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(c.is_cycle_of(&Graph::cycle(4)));
        assert!(!c.is_cycle_of(&Graph::path(4)));
    }

    #[test]
    fn cycle_set_offer_keeps_longest() {
        let mut s = CycleSet::default();
        s.offer(canonical_cycle(&[0, 1, 2]).unwrap());
        s.offer(canonical_cycle(&[0, 1, 2, 3]).unwrap());
        s.offer(canonical_cycle(&[4, 5, 6]).unwrap());
        s.offer(canonical_cycle(&[3, 2, 1, 0]).unwrap());
        assert_eq!(s.length(), 4);
        assert_eq!(s.len(), 1);
        assert!(s.insert(canonical_cycle(&[0, 1, 2]).unwrap()).is_err());
    }

    proptest! {
        #[test]
        fn canonical_is_invariant_under_dihedral_moves(
            perm in Just((0usize..9).collect::<Vec<_>>()).prop_shuffle(),
            len in 3usize..=9,
            shift in 0usize..9,
            flip in any::<bool>(),
        ) {
            let seq: Vec<usize> = perm[..len].to_vec();
            let base = canonical_cycle(&seq).unwrap();
            prop_assert_eq!(canonical_cycle(base.vertices()).unwrap(), base.clone());
            let mut moved: Vec<usize> = (0..len).map(|i| seq[(i + shift) % len]).collect();
            if flip {
                moved.reverse();
            }
            prop_assert_eq!(canonical_cycle(&moved).unwrap(), base.clone());
            let v = base.vertices();
            prop_assert_eq!(v[0], *v.iter().min().unwrap());
            prop_assert!(v[1] < v[len - 1]);
        }
    }
}
