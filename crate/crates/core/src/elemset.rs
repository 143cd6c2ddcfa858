//! Fixed-width bitset over element ids.
//!
//! Ring orders are capped at [`MAX_ORDER`](crate::finring::MAX_ORDER) = 256, so
//! every subset of a ring fits in four machine words and is `Copy`.

use std::fmt;

use serde::{Deserialize, Serialize};

const WORDS: usize = 4;

/// A subset of `0..256`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElemSet([u64; WORDS]);

impl ElemSet {
    pub const fn empty() -> Self {
        ElemSet([0; WORDS])
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= WORDS * 64);
        let mut s = ElemSet::empty();
        for (w, word) in s.0.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(e: usize) -> Self {
        let mut s = ElemSet::empty();
        s.insert(e);
        s
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        e < WORDS * 64 && self.0[e >> 6] & (1u64 << (e & 63)) != 0
    }

    /// Returns `true` if `e` was not already present.
    #[inline]
    pub fn insert(&mut self, e: usize) -> bool {
        let (w, bit) = (e >> 6, 1u64 << (e & 63));
        let fresh = self.0[w] & bit == 0;
        self.0[w] |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        self.0[e >> 6] &= !(1u64 << (e & 63));
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= !b;
        }
        out
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter {
        Iter { words: self.0, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::empty();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// Ordering used for canonical ideal lists: smaller sets first, then by the
// sorted member list.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for ElemSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(deserializer)?;
        if let Some(bad) = v.iter().find(|&&e| e >= WORDS * 64) {
            return Err(serde::de::Error::custom(format!("element id {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_len() {
        assert_eq!(ElemSet::full(0).len(), 0);
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(ElemSet::full(65).len(), 65);
        assert_eq!(ElemSet::full(256).len(), 256);
        assert_eq!(ElemSet::full(12).to_vec(), (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn ordering_is_size_first() {
        let a: ElemSet = [0, 6].into_iter().collect();
        let b: ElemSet = [0, 4, 8].into_iter().collect();
        let c: ElemSet = [0, 3].into_iter().collect();
        assert!(a < b);
        assert!(c < a);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(xs in proptest::collection::vec(0usize..256, 0..40),
                                         ys in proptest::collection::vec(0usize..256, 0..40)) {
            use std::collections::BTreeSet;
            let (a, b): (ElemSet, ElemSet) = (xs.iter().copied().collect(), ys.iter().copied().collect());
            let (sa, sb): (BTreeSet<usize>, BTreeSet<usize>) = (xs.into_iter().collect(), ys.into_iter().collect());
            prop_assert_eq!(a.union(&b).to_vec(), sa.union(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).to_vec(), sa.intersection(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.difference(&b).to_vec(), sa.difference(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_subset(&b), sa.is_subset(&sb));
            prop_assert_eq!(a.len(), sa.len());
            prop_assert_eq!(a.first(), sa.iter().next().copied());
        }
    }
}
