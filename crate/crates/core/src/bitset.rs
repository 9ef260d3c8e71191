//! Fixed-capacity vertex sets backed by `u64` words.

use std::fmt;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A subset of `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            capacity,
            words: vec![0; words_for(capacity)],
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = VertexSet::new(capacity);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn from_iter(capacity: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in items {
            s.insert(v);
        }
        s
    }

    pub(crate) fn from_words(capacity: usize, words: &[u64]) -> Self {
        let mut s = VertexSet {
            capacity,
            words: words.to_vec(),
        };
        s.trim();
        s
    }

    fn trim(&mut self) {
        let r = self.capacity % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.capacity, "vertex {v} outside set capacity {}", self.capacity);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.capacity {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        first_in(&self.words)
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones::new(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersect_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a |= b;
        }
        self.trim();
    }

    pub fn difference_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            capacity: self.capacity,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_len(&self, other: &[u64]) -> usize {
        count_and(&self.words, other)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a word slice, ascending.
pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[inline]
pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

#[inline]
pub(crate) fn first_in(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

#[inline]
pub(crate) fn test(words: &[u64], v: usize) -> bool {
    words[v / 64] >> (v % 64) & 1 == 1
}

#[inline]
pub(crate) fn set(words: &mut [u64], v: usize) {
    words[v / 64] |= 1 << (v % 64);
}

#[inline]
pub(crate) fn clear(words: &mut [u64], v: usize) {
    words[v / 64] &= !(1 << (v % 64));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_iterate() {
        let mut s = VertexSet::new(130);
        for v in [0, 63, 64, 129] {
            s.insert(v);
        }
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        s.remove(64);
        assert_eq!(s.len(), 3);
        assert!(!s.contains(64));
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn full_and_complement_respect_capacity() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(s.complement().is_empty());
        let t = VertexSet::from_iter(70, [1, 2]);
        assert_eq!(t.complement().len(), 68);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_iter(10, [1, 2, 3]);
        let b = VertexSet::from_iter(10, [2, 3, 4]);
        let mut c = a.clone();
        c.intersect_with(b.words());
        assert_eq!(c.to_vec(), vec![2, 3]);
        let mut d = a.clone();
        d.difference_with(b.words());
        assert_eq!(d.to_vec(), vec![1]);
        assert!(c.is_subset_of(&a));
        assert_eq!(a.intersection_len(b.words()), 2);
    }
}
