use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A set of vertex indices backed by machine words.
///
/// Sets over vertices `0..64` live inline in a single word; larger indices
/// spill to the heap. Trailing zero words are always trimmed so that equality
/// and hashing do not depend on how a set was built.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 1]> = SmallVec::new();
        let full_words = n / 64;
        words.resize(full_words, u64::MAX);
        if !n.is_multiple_of(64) {
            words.push((1u64 << (n % 64)) - 1);
        }
        Self { words }
    }

    /// Builds a set from the low bits of a mask (used by exhaustive scans).
    pub fn from_mask(mask: u64) -> Self {
        let mut words = SmallVec::new();
        if mask != 0 {
            words.push(mask);
        }
        Self { words }
    }

    /// The set as a single-word mask, if every element is below 64.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1u64 << (v % 64)) != 0)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] & (1u64 << b) != 0;
        self.words[w] |= 1u64 << b;
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        let Some(word) = self.words.get_mut(w) else {
            return false;
        };
        let had = *word & (1u64 << b) != 0;
        *word &= !(1u64 << b);
        self.trim();
        had
    }

    pub fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn last(&self) -> Option<usize> {
        let (i, w) = self.words.iter().enumerate().rev().find(|(_, w)| **w != 0)?;
        Some(i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(short.words.iter()) {
            *w |= o;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut words: SmallVec<[u64; 1]> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        let mut s = Self { words };
        s.trim();
        s
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if self.words.len() > other.words.len() {
            return false;
        }
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Every member below `n`.
    pub fn is_within(&self, n: usize) -> bool {
        self.last().is_none_or(|m| m < n)
    }

    /// Adds `offset` to every member.
    pub fn shifted(&self, offset: usize) -> Self {
        self.iter().map(|v| v + offset).collect()
    }

    /// Applies a relabeling; members without an image are dropped.
    pub fn mapped(&self, map: impl Fn(usize) -> Option<usize>) -> Self {
        self.iter().filter_map(map).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// Lexicographic order on the ascending member sequences, so that
/// `{0,1} < {0,2} < {1}` and `{} < {0}`.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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
    use proptest::prelude::*;

    #[test]
    fn multiword_membership() {
        let mut s = VertexSet::new();
        s.insert(3);
        s.insert(70);
        assert!(s.contains(70) && s.contains(3) && !s.contains(64));
        assert_eq!(s.len(), 2);
        assert_eq!(s.last(), Some(70));
        s.remove(70);
        assert_eq!(s, VertexSet::singleton(3));
        assert_eq!(s.as_mask(), Some(8));
    }

    #[test]
    fn full_set_sizes() {
        assert_eq!(VertexSet::full(0), VertexSet::new());
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).last(), Some(64));
    }

    #[test]
    fn lexicographic_order() {
        let a: VertexSet = [0, 1].into_iter().collect();
        let b: VertexSet = [0, 2].into_iter().collect();
        let c = VertexSet::singleton(1);
        assert!(VertexSet::new() < a && a < b && b < c);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(
            xs in proptest::collection::btree_set(0usize..150, 0..20),
            ys in proptest::collection::btree_set(0usize..150, 0..20),
        ) {
            let a: VertexSet = xs.iter().copied().collect();
            let b: VertexSet = ys.iter().copied().collect();
            let u: Vec<usize> = xs.union(&ys).copied().collect();
            let i: Vec<usize> = xs.intersection(&ys).copied().collect();
            let d: Vec<usize> = xs.difference(&ys).copied().collect();
            prop_assert_eq!(a.union(&b).to_vec(), u);
            prop_assert_eq!(a.intersection(&b), i.iter().copied().collect::<VertexSet>());
            prop_assert_eq!(a.difference(&b).to_vec(), d);
            prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
            prop_assert_eq!(a.intersection_len(&b), i.len());
            prop_assert_eq!(a.cmp(&b), xs.iter().cmp(ys.iter()));
        }
    }
}
