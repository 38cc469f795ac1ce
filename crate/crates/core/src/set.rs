//! Fixed-width bit-vector subsets of a group's elements.
//!
//! Every set remembers the identity of the group it was built over, and the
//! checked operations refuse to mix sets from different groups. Groups are
//! capped at [`MAX_ORDER`] elements, so four 64-bit words always suffice and
//! `ElementSet` stays `Copy`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 200;

const WORDS: usize = 4;

/// Opaque identity of a constructed group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(pub(crate) u32);

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    group: GroupId,
    len: u16,
    words: [u64; WORDS],
}

impl ElementSet {
    pub(crate) fn empty(group: GroupId, len: usize) -> Self {
        debug_assert!(len <= MAX_ORDER);
        ElementSet {
            group,
            len: len as u16,
            words: [0; WORDS],
        }
    }

    pub(crate) fn full(group: GroupId, len: usize) -> Self {
        let mut s = Self::empty(group, len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub(crate) fn from_indices<I: IntoIterator<Item = usize>>(
        group: GroupId,
        len: usize,
        items: I,
    ) -> Self {
        let mut s = Self::empty(group, len);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    /// Order of the parent group (the width of the bit-vector).
    pub fn universe(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len as usize && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len as usize, "element {i} out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.len as usize {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.len as usize
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word: 0,
        }
    }

    pub fn same_parent(&self, other: &ElementSet) -> bool {
        self.group == other.group
    }

    fn check(&self, other: &ElementSet) -> Result<()> {
        if self.same_parent(other) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn union(&self, other: &ElementSet) -> Result<ElementSet> {
        self.check(other)?;
        Ok(self.or(other))
    }

    pub fn intersection(&self, other: &ElementSet) -> Result<ElementSet> {
        self.check(other)?;
        Ok(self.and(other))
    }

    pub fn difference(&self, other: &ElementSet) -> Result<ElementSet> {
        self.check(other)?;
        Ok(self.and_not(other))
    }

    pub fn is_subset(&self, other: &ElementSet) -> Result<bool> {
        self.check(other)?;
        Ok(self.subset_of(other))
    }

    pub fn complement(&self) -> ElementSet {
        ElementSet::full(self.group, self.len as usize).and_not(self)
    }

    // Unchecked variants for hot paths where both sides are known to share
    // a parent; debug builds still assert it.

    #[inline]
    pub(crate) fn or(&self, other: &ElementSet) -> ElementSet {
        debug_assert!(self.same_parent(other));
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words) {
            *a |= b;
        }
        out
    }

    #[inline]
    pub(crate) fn and(&self, other: &ElementSet) -> ElementSet {
        debug_assert!(self.same_parent(other));
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words) {
            *a &= b;
        }
        out
    }

    #[inline]
    pub(crate) fn and_not(&self, other: &ElementSet) -> ElementSet {
        debug_assert!(self.same_parent(other));
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words) {
            *a &= !b;
        }
        out
    }

    #[inline]
    pub(crate) fn subset_of(&self, other: &ElementSet) -> bool {
        debug_assert!(self.same_parent(other));
        self.words
            .iter()
            .zip(other.words)
            .all(|(&a, b)| a & !b == 0)
    }

    #[inline]
    pub(crate) fn meets(&self, other: &ElementSet) -> bool {
        debug_assert!(self.same_parent(other));
        self.words.iter().zip(other.words).any(|(&a, b)| a & b != 0)
    }
}

/// Sets order by size, then lexicographically by their sorted member lists.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group
            .cmp(&other.group)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| {
                // The lowest differing bit decides: whoever holds it sorts first.
                for (a, b) in self.words.iter().zip(other.words) {
                    let diff = a ^ b;
                    if diff != 0 {
                        let bit = diff & diff.wrapping_neg();
                        return if a & bit != 0 {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        };
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
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

impl IntoIterator for &ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}
