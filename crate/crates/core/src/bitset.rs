//! Fixed-width vertex sets.
//!
//! Sets over at most 64 vertices live inline in a single word; wider graphs
//! spill to the heap transparently.

use smallvec::{smallvec, SmallVec};
use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    /// Empty set able to hold vertices `0..capacity`.
    pub fn with_capacity(capacity: usize) -> Self {
        let len = capacity.div_ceil(WORD).max(1);
        VertexSet {
            words: smallvec![0; len],
        }
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::with_capacity(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter_with_capacity<I: IntoIterator<Item = usize>>(capacity: usize, it: I) -> Self {
        let mut s = Self::with_capacity(capacity);
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD)
            .is_some_and(|w| w >> (v % WORD) & 1 == 1)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        let i = v / WORD;
        if i >= self.words.len() {
            self.words.resize(i + 1, 0);
        }
        self.words[i] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if let Some(w) = self.words.get_mut(v / WORD) {
            *w &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Size of the intersection with `other`, without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (i, w) in out.words.iter_mut().enumerate() {
            *w &= other.words.get(i).copied().unwrap_or(0);
        }
        out
    }

    /// True when the two sets share no element.
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection_len(other) == 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * WORD + b)
                }
            })
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_and_spilled_sets() {
        let mut s = VertexSet::with_capacity(10);
        s.insert(3);
        s.insert(9);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 9]);
        s.insert(130);
        assert!(s.contains(130));
        assert!(!s.contains(64));
        assert_eq!(s.len(), 3);
        s.remove(3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![9, 130]);
    }

    #[test]
    fn set_relations() {
        let a = VertexSet::from_iter_with_capacity(70, [1, 2, 65]);
        let b = VertexSet::from_iter_with_capacity(70, [2, 65, 66]);
        assert_eq!(a.intersection_len(&b), 2);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![2, 65]);
        assert!(!a.is_subset(&b));
        assert!(VertexSet::from_iter_with_capacity(70, [2]).is_subset(&a));
        assert!(VertexSet::full(0).is_empty());
    }
}
