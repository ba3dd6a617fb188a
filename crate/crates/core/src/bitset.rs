//! Fixed-width bitsets over element codes.
//!
//! Ideal membership, multiplicative sets, and unit/zerodivisor sets are all
//! subsets of a ring's element codes `0..order`, so a flat bitset is the
//! canonical representation: equality is word comparison and the lattice
//! operations are word-wise logic.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A set of element codes `0..len`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    len: usize,
    words: Vec<u64>,
}

impl Bitset {
    pub fn empty(len: usize) -> Self {
        Bitset {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn singleton(len: usize, code: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(code);
        s
    }

    pub fn from_codes(len: usize, codes: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for c in codes {
            s.insert(c);
        }
        s
    }

    /// Universe size (the ring order), not the cardinality.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    #[inline]
    pub fn contains(&self, code: usize) -> bool {
        debug_assert!(code < self.len);
        self.words[code / 64] & (1 << (code % 64)) != 0
    }

    #[inline]
    pub fn insert(&mut self, code: usize) -> bool {
        debug_assert!(code < self.len);
        let w = &mut self.words[code / 64];
        let bit = 1 << (code % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, code: usize) {
        debug_assert!(code < self.len);
        self.words[code / 64] &= !(1 << (code % 64));
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &Bitset) -> Bitset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn is_subset(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Iterates member codes in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, w)| {
            let mut w = *w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }

    pub fn to_codes(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Total order used for canonical ideal enumeration: at the first element
/// code where two sets differ, the set containing it sorts first. With equal
/// cardinality this matches lexicographic comparison of sorted member lists.
impl Ord for Bitset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                let diff = a ^ b;
                if diff != 0 {
                    let bit = 1u64 << diff.trailing_zeros();
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

impl PartialOrd for Bitset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::fmt::Debug for Bitset {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
