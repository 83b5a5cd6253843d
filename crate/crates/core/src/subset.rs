//! Fixed-width bitsets over a hyperring carrier.
//!
//! Every hyperproduct, hyperideal and closed set in the crate is an
//! [`ElementSubset`]. The width is fixed at [`MAX_CARRIER`] bits so the type is
//! `Copy` and comparisons are plain word compares.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORDS: usize = 4;

/// Largest carrier the crate can represent.
pub const MAX_CARRIER: usize = WORDS * 64;

/// A subset of the carrier `0..n`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSubset {
    words: [u64; WORDS],
}

impl ElementSubset {
    pub const EMPTY: ElementSubset = ElementSubset { words: [0; WORDS] };

    pub fn empty() -> Self {
        Self::EMPTY
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(x);
        s
    }

    /// The whole carrier `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_CARRIER, "carrier of size {n} exceeds {MAX_CARRIER}");
        let mut s = Self::EMPTY;
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    /// Builds a subset from the low bits of `mask` (used by exhaustive scans).
    pub fn from_mask(mask: u64) -> Self {
        let mut s = Self::EMPTY;
        s.words[0] = mask;
        s
    }

    /// Low 64 bits; meaningful only for carriers of at most 64 elements.
    pub fn low_mask(&self) -> u64 {
        self.words[0]
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        debug_assert!(x < MAX_CARRIER);
        self.words[x / 64] |= 1u64 << (x % 64);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.words[x / 64] &= !(1u64 << (x % 64));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < MAX_CARRIER && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = *self;
        s.union_with(other);
        s
    }

    #[inline]
    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = *self;
        for (a, b) in s.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = *self;
        for (a, b) in s.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
        s
    }

    /// Complement relative to the carrier `0..n`.
    pub fn complement(&self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Largest member, if any.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical order used everywhere a family of subsets is listed:
    /// cardinality first, then the bitmask read as a big number.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl FromIterator<usize> for ElementSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = Self::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for &ElementSubset {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
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
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ElementSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSubset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = items.iter().find(|&&x| x >= MAX_CARRIER) {
            return Err(serde::de::Error::custom(format!(
                "element {bad} exceeds the maximum carrier size {MAX_CARRIER}"
            )));
        }
        Ok(items.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_covers_exactly_the_carrier() {
        for n in [0, 1, 5, 63, 64, 65, 128, 200, 256] {
            let s = ElementSubset::full(n);
            assert_eq!(s.len(), n);
            assert_eq!(s.last(), n.checked_sub(1));
        }
    }

    #[test]
    fn display_lists_members_in_order() {
        let s: ElementSubset = [3, 0, 130].into_iter().collect();
        assert_eq!(s.to_string(), "{0,3,130}");
        assert_eq!(ElementSubset::EMPTY.to_string(), "{}");
    }

    #[test]
    fn canonical_order_is_cardinality_then_mask() {
        let a: ElementSubset = [0, 2].into_iter().collect();
        let b: ElementSubset = [1].into_iter().collect();
        let c: ElementSubset = [0, 1].into_iter().collect();
        let mut v = vec![a, b, c];
        v.sort_by(|x, y| x.canonical_cmp(y));
        assert_eq!(v, vec![b, c, a]);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(xs in proptest::collection::btree_set(0usize..256, 0..40),
                                        ys in proptest::collection::btree_set(0usize..256, 0..40)) {
            let a: ElementSubset = xs.iter().copied().collect();
            let b: ElementSubset = ys.iter().copied().collect();
            let inter: Vec<usize> = xs.intersection(&ys).copied().collect();
            let uni: Vec<usize> = xs.union(&ys).copied().collect();
            prop_assert_eq!(a.intersection(&b).to_vec(), inter);
            prop_assert_eq!(a.union(&b).to_vec(), uni);
            prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
            prop_assert_eq!(a.intersects(&b), !xs.is_disjoint(&ys));
            prop_assert_eq!(a.len(), xs.len());
        }

        #[test]
        fn json_round_trip(xs in proptest::collection::btree_set(0usize..256, 0..40)) {
            let a: ElementSubset = xs.iter().copied().collect();
            let text = serde_json::to_string(&a).unwrap();
            let back: ElementSubset = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(a, back);
        }
    }
}
