//! Fixed-width vertex subsets.
//!
//! Every set has room for [`CAPACITY`] vertices, so two sets over the same
//! graph compare, hash and order the same way regardless of how they were
//! built. DP tables key on these sets directly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORDS: usize = 16;

/// Largest supported vertex count.
pub const CAPACITY: usize = WORDS * 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    #[inline]
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= CAPACITY,
            "vertex count {n} exceeds capacity {CAPACITY}"
        );
        let mut s = Self::new();
        let whole = n / 64;
        for w in s.words.iter_mut().take(whole) {
            *w = u64::MAX;
        }
        if n % 64 != 0 {
            s.words[whole] = (1u64 << (n % 64)) - 1;
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < CAPACITY, "vertex {v} exceeds capacity {CAPACITY}");
        let (w, b) = (v / 64, v % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= CAPACITY {
            return false;
        }
        let (w, b) = (v / 64, v % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < CAPACITY && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_superset(&self, other: &VertexSet) -> bool {
        other.is_subset(self)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// `|self ∩ other|` without materialising the intersection.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words[0],
        }
    }

    /// All subsets of `self` with at most `max_len` members, in a fixed order
    /// (by size, then lexicographically by position).
    pub fn subsets_up_to(&self, max_len: usize) -> Vec<VertexSet> {
        let members: Vec<usize> = self.iter().collect();
        let mut out = vec![VertexSet::new()];
        let mut frontier: Vec<(VertexSet, usize)> = vec![(VertexSet::new(), 0)];
        for _ in 0..max_len.min(members.len()) {
            let mut next = Vec::new();
            for (set, start) in frontier {
                for (i, &v) in members.iter().enumerate().skip(start) {
                    let mut s = set;
                    s.insert(v);
                    out.push(s);
                    next.push((s, i + 1));
                }
            }
            frontier = next;
        }
        out
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Lexicographic order on the ascending member sequences, so `{0,5} < {1}`
/// and a proper prefix sorts first.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        for i in 0..WORDS {
            let diff = self.words[i] ^ other.words[i];
            if diff == 0 {
                continue;
            }
            let bit = diff.trailing_zeros();
            let mask_above = if bit == 63 { 0 } else { u64::MAX << (bit + 1) };
            let (with, without) = if self.words[i] >> bit & 1 == 1 {
                (self, other)
            } else {
                (other, self)
            };
            let without_has_more = without.words[i] & mask_above != 0
                || without.words[i + 1..].iter().any(|&w| w != 0);
            let with_smaller = without_has_more;
            let self_smaller = if std::ptr::eq(with, self) {
                with_smaller
            } else {
                !with_smaller
            };
            return if self_smaller {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        Ordering::Equal
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

macro_rules! bitop {
    ($tr:ident, $f:ident, $tra:ident, $fa:ident, |$a:ident, $b:ident| $e:expr) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(mut self, rhs: VertexSet) -> VertexSet {
                self.$fa(rhs);
                self
            }
        }
        impl $tr<&VertexSet> for &VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: &VertexSet) -> VertexSet {
                let mut out = *self;
                out.$fa(*rhs);
                out
            }
        }
        impl $tra for VertexSet {
            #[inline]
            fn $fa(&mut self, rhs: VertexSet) {
                for ($a, $b) in self.words.iter_mut().zip(rhs.words.iter()) {
                    *$a = $e;
                }
            }
        }
    };
}

bitop!(BitOr, bitor, BitOrAssign, bitor_assign, |a, b| *a | b);
bitop!(BitAnd, bitand, BitAndAssign, bitand_assign, |a, b| *a & b);
bitop!(Sub, sub, SubAssign, sub_assign, |a, b| *a & !b);

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = members.iter().find(|&&v| v >= CAPACITY) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} exceeds capacity {CAPACITY}"
            )));
        }
        Ok(members.into_iter().collect())
    }
}
