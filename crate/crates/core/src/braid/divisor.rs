//! Divisors of the Garside element and their canonical block words.
//!
//! Every divisor of `Δ_n` is a product of descending blocks
//! `β_(k,j) = x_k x_(k-1) ... x_j` with strictly increasing `k` and `j <= k`.
//! Block `k` carries strand `k+1` down past the strands it overtakes, so its
//! length is the number of inversions `(i, k+1)` with `i <= k`.

use serde::Serialize;

use super::normal_form::NormalForm;
use super::perm::Permutation;
use super::word::BraidWord;
use crate::error::{BraidError, Result};

/// Largest strand count [`enumerate_divisors`] accepts by default.
pub const DEFAULT_DIVISOR_BOUND: usize = 7;

/// One block `x_k x_(k-1) ... x_j` of the canonical divisor word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Block {
    pub k: usize,
    pub j: usize,
}

impl Block {
    pub fn letters(self) -> impl Iterator<Item = usize> {
        (self.j..=self.k).rev()
    }
}

pub fn word_to_permutation(word: &BraidWord) -> Permutation {
    Permutation::of_letters(word.strands(), word.letters())
}

/// `Δ_n = x1 (x2 x1) ... (x(n-1) ... x1)`.
pub fn garside_element(n: usize) -> BraidWord {
    assert!(n >= 1);
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for k in 1..n {
        letters.extend((1..=k).rev());
    }
    BraidWord::from_parts_unchecked(n, letters)
}

/// `Σ^offset Δ_m` viewed on `n` strands: the half twist of strands
/// `offset+1 ..= offset+m`.
pub fn shifted_garside_element(m: usize, offset: usize, n: usize) -> Result<BraidWord> {
    if offset + m > n {
        return Err(BraidError::IndexOutOfRange { index: (offset + m) as i64, strands: n });
    }
    garside_element(m).shift(offset as i64, n)
}

pub fn permutation_blocks(p: &Permutation) -> Vec<Block> {
    let n = p.strands();
    let mut blocks = Vec::new();
    for k in 1..n {
        // strand k+1 (zero-based k) is overtaken by the earlier strands ending above it
        let target = p.image0(k);
        let below = (0..k).filter(|&i| p.image0(i) < target).count();
        let j = below + 1;
        if j <= k {
            blocks.push(Block { k, j });
        }
    }
    blocks
}

/// The square-free braid with permutation `p`, written in block form.
pub fn permutation_to_divisor(p: &Permutation) -> BraidWord {
    let letters = permutation_blocks(p).into_iter().flat_map(Block::letters).collect();
    BraidWord::from_parts_unchecked(p.strands(), letters)
}

/// Block form `(k_h, j_h)` of a square-free braid.
pub fn divisor_canonical_form(word: &BraidWord) -> Result<Vec<Block>> {
    let nf = NormalForm::of_word(word);
    match nf.factors() {
        [] => Ok(Vec::new()),
        [p] => Ok(permutation_blocks(p)),
        _ => Err(BraidError::NotSquareFree),
    }
}

/// All divisors of `Δ_n`, sorted by normal form.
pub fn enumerate_divisors(n: usize) -> Result<Vec<NormalForm>> {
    enumerate_divisors_bounded(n, DEFAULT_DIVISOR_BOUND)
}

pub fn enumerate_divisors_bounded(n: usize, bound: usize) -> Result<Vec<NormalForm>> {
    if n == 0 {
        return Err(BraidError::InvalidStrands(0));
    }
    if n > bound {
        return Err(BraidError::BoundExceeded { what: "divisor enumeration strand", limit: bound });
    }
    let mut out: Vec<NormalForm> = all_permutations(n).iter().map(NormalForm::of_permutation).collect();
    out.sort();
    Ok(out)
}

/// All permutations of `n` strands in lexicographic order of images.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![Permutation::from_zero_based(current.clone())];
    // next lexicographic permutation
    while let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) {
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("pivot exists");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Permutation::from_zero_based(current.clone()));
    }
    out
}
