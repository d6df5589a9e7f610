//! GF(2) edge sets. Edge indices are 1-based at the API boundary.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    m: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(m: usize) -> Self {
        EdgeSet { m, words: vec![0; m.div_ceil(64)] }
    }

    pub fn from_indices(m: usize, idx: &[usize]) -> Result<Self> {
        let mut s = Self::empty(m);
        for &e in idx {
            if e == 0 || e > m {
                return Err(Error::NoSuchEdge { e, m });
            }
            s.insert(e);
        }
        Ok(s)
    }

    /// Size of the edge space, not the number of members.
    pub fn space(&self) -> usize {
        self.m
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        debug_assert!(e >= 1 && e <= self.m);
        let i = e - 1;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        let i = e - 1;
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        let i = e - 1;
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn toggle(&mut self, e: usize) {
        let i = e - 1;
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn intersects(&self, other: &EdgeSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_count(&self, other: &EdgeSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// XOR in place; errors if the edge spaces differ.
    pub fn ring_add(&mut self, other: &EdgeSet) -> Result<()> {
        if self.m != other.m {
            return Err(Error::EdgeSpaceMismatch(self.m, other.m));
        }
        *self ^= other;
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b + 1)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl BitXorAssign<&EdgeSet> for EdgeSet {
    fn bitxor_assign(&mut self, rhs: &EdgeSet) {
        assert_eq!(self.m, rhs.m, "edge space mismatch");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor for &EdgeSet {
    type Output = EdgeSet;
    fn bitxor(self, rhs: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

/// Order by member count, then by the sorted index list.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.count()
            .cmp(&other.count())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.m.cmp(&other.m))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "e{e}")?;
        }
        write!(f, "}}")
    }
}
