//! Fixed-length bit sets over element indices.
//!
//! Every ideal, colon set and product in the crate is one of these. The
//! length is the ring order and is fixed at construction; all binary
//! operations assume equal lengths.

use std::cmp::Ordering;
use std::fmt;

type Word = u64;
const WORD_BITS: usize = Word::BITS as usize;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<Word>,
}

impl BitSet {
    pub fn empty(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut set = BitSet {
            len,
            words: vec![Word::MAX; words_for(len)],
        };
        set.clear_tail();
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut set = Self::empty(len);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Builds a set from the low `len` bits of `mask`. Only valid for `len <= 64`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD_BITS);
        let mut set = BitSet {
            len,
            words: vec![mask; words_for(len)],
        };
        set.clear_tail();
        set
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// Returns true if the bit was newly set.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for bit set of length {}",
            self.len
        );
        let w = &mut self.words[i / WORD_BITS];
        let bit = 1 << (i % WORD_BITS);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    /// Returns true if `self` changed.
    pub fn union_with(&mut self, other: &BitSet) -> bool {
        let mut changed = false;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            let next = *a | b;
            changed |= next != *a;
            *a = next;
        }
        changed
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Total order used for all enumeration output: population count first,
    /// then the set read as an unsigned integer with bit `i` of weight `2^i`.
    pub fn canonical_cmp(&self, other: &BitSet) -> Ordering {
        self.count().cmp(&other.count()).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [Word],
    word_idx: usize,
    current: Word,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            self.current = *self.words.get(self.word_idx)?;
        }
    }
}

impl<'a> IntoIterator for &'a BitSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
