//! Permutations of strands, read as positive permutation braids.
//!
//! Letters act left to right and a permutation maps a strand's starting
//! position to its end position. `x_i` exchanges positions `i` and `i+1`.
//! A permutation braid is the unique positive braid in which every pair of
//! strands crosses at most once; its crossings are exactly the inversions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{BraidError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[start] = end, zero-based
    images: Box<[u8]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "at most 255 strands are supported");
        Permutation { images: (0..n as u8).collect() }
    }

    /// Builds a permutation from one-based images `p(1), ..., p(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in images {
            if p == 0 || p > n || seen[p - 1] || n > u8::MAX as usize {
                return Err(BraidError::InvalidPermutation(images.to_vec()));
            }
            seen[p - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&p| (p - 1) as u8).collect() })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        Permutation { images: images.into_boxed_slice() }
    }

    pub fn of_letters(n: usize, letters: &[usize]) -> Self {
        // at[pos] = strand currently at pos
        let mut at: Vec<u8> = (0..n as u8).collect();
        for &i in letters {
            at.swap(i - 1, i);
        }
        let mut images = vec![0u8; n];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand as usize] = pos as u8;
        }
        Permutation::from_zero_based(images)
    }

    pub fn strands(&self) -> usize {
        self.images.len()
    }

    /// One-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&p| p as usize + 1).collect()
    }

    /// Zero-based end position of the strand starting at zero-based `start`.
    #[inline]
    pub(crate) fn image0(&self, start: usize) -> usize {
        self.images[start] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        Permutation::from_zero_based(inv)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.strands(), other.strands());
        Permutation { images: self.images.iter().map(|&p| other.images[p as usize]).collect() }
    }

    /// Number of inversions, the length of the permutation braid.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn reversal(n: usize) -> Self {
        Permutation { images: (0..n as u8).rev().collect() }
    }

    /// Generators `x_i` that left-divide the permutation braid.
    pub fn starting_set(&self) -> BTreeSet<usize> {
        (1..self.strands()).filter(|&i| self.starts_with(i)).collect()
    }

    /// Generators `x_i` that right-divide the permutation braid.
    pub fn finishing_set(&self) -> BTreeSet<usize> {
        (1..self.strands()).filter(|&i| self.ends_with(i)).collect()
    }

    #[inline]
    pub fn starts_with(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    #[inline]
    pub fn ends_with(&self, i: usize) -> bool {
        let a = self.position_of_image(i - 1);
        let b = self.position_of_image(i);
        a > b
    }

    #[inline]
    fn position_of_image(&self, end: usize) -> usize {
        self.images.iter().position(|&p| p as usize == end).expect("bijection")
    }

    /// Appends `x_i`; the caller guarantees `i` is not in the finishing set.
    pub(crate) fn push_letter(&mut self, i: usize) {
        let a = self.position_of_image(i - 1);
        let b = self.position_of_image(i);
        self.images.swap(a, b);
    }

    /// Removes a leading `x_i`; the caller guarantees `i` is in the starting set.
    pub(crate) fn pop_front_letter(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// Left weak order: the permutation braid `self` left-divides `other`.
    pub fn left_divides(&self, other: &Permutation) -> bool {
        let n = self.images.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] && other.images[i] < other.images[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Extends by fixed strands on top.
    pub fn embed(&self, n: usize) -> Self {
        let mut images = self.images.to_vec();
        images.extend(self.images.len() as u8..n as u8);
        Permutation::from_zero_based(images)
    }

    /// Drops fixed top strands down to `n`; `None` if one of them moves.
    pub fn restrict(&self, n: usize) -> Option<Self> {
        if self.images[n..].iter().enumerate().any(|(k, &p)| p as usize != n + k) {
            return None;
        }
        Some(Permutation::from_zero_based(self.images[..n].to_vec()))
    }

    /// Disjoint cycles (one-based strand labels), each starting at its
    /// smallest element, sorted by that element. Fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.images[k] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}
