//! Components, linking numbers and split pieces of a closed braid.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::laurent::rational;
use crate::braid::{word_to_permutation, BraidWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureComponents {
    pub strands: usize,
    /// Strand labels of each component, each list starting at its smallest strand.
    pub components: Vec<Vec<usize>>,
}

impl ClosureComponents {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// Component index of each (one-based) strand, at position `strand - 1`.
    pub fn component_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.strands];
        for (c, strands) in self.components.iter().enumerate() {
            for &s in strands {
                out[s - 1] = c;
            }
        }
        out
    }
}

pub fn closure_components(w: &BraidWord) -> ClosureComponents {
    ClosureComponents { strands: w.strands(), components: word_to_permutation(w).cycles() }
}

/// Number of crossings between each pair of distinct components.
pub fn crossing_counts(w: &BraidWord) -> Vec<Vec<usize>> {
    let comps = closure_components(w);
    let owner = comps.component_of();
    let c = comps.count();
    let mut counts = vec![vec![0; c]; c];
    // at[pos] = starting strand currently at pos
    let mut at: Vec<usize> = (0..w.strands()).collect();
    for &i in w.letters() {
        let (a, b) = (owner[at[i - 1]], owner[at[i]]);
        if a != b {
            counts[a][b] += 1;
            counts[b][a] += 1;
        }
        at.swap(i - 1, i);
    }
    counts
}

/// Crossing count over two for each pair of components; zero diagonal.
///
/// Every crossing of a positive braid has the same sign, so only the
/// magnitude is recorded.
pub fn linking_matrix(w: &BraidWord) -> Vec<Vec<BigRational>> {
    crossing_counts(w)
        .into_iter()
        .map(|row| row.into_iter().map(|k| rational(k as i64, 2)).collect())
        .collect()
}

pub fn is_split_diagram(w: &BraidWord) -> bool {
    linking_matrix(w).iter().flatten().all(Zero::is_zero)
}

/// Maximal strand intervals not joined by any generator, each with its
/// sub-braid reindexed to start at strand 1. Intervals are one-based `(lo, hi)`.
pub fn split_support(w: &BraidWord) -> Vec<(BraidWord, (usize, usize))> {
    let n = w.strands();
    let support = w.support();
    let mut groups = Vec::new();
    let mut lo = 1;
    for j in 1..=n {
        if j == n || !support.contains(&j) {
            let letters: Vec<usize> =
                w.letters().iter().filter(|&&i| i >= lo && i < j).map(|&i| i + 1 - lo).collect();
            groups.push((BraidWord::new(j - lo + 1, letters).expect("reindexed letters fit"), (lo, j)));
            lo = j + 1;
        }
    }
    groups
}

/// The word as maximal runs `x_i^a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllableWord {
    pub strands: usize,
    pub syllables: Vec<(usize, usize)>,
}

impl SyllableWord {
    pub fn of_word(w: &BraidWord) -> Self {
        let mut syllables: Vec<(usize, usize)> = Vec::new();
        for &i in w.letters() {
            match syllables.last_mut() {
                Some((j, a)) if *j == i => *a += 1,
                _ => syllables.push((i, 1)),
            }
        }
        SyllableWord { strands: w.strands(), syllables }
    }

    /// Merges the last syllable into the first when they share a generator
    /// (a cyclic rotation, hence a conjugation).
    pub fn cyclically_merged(w: &BraidWord) -> Self {
        let mut sw = SyllableWord::of_word(w);
        if sw.syllables.len() > 1 && sw.syllables[0].0 == sw.syllables[sw.syllables.len() - 1].0 {
            let (_, a) = sw.syllables.pop().expect("nonempty");
            sw.syllables[0].1 += a;
        }
        sw
    }

    pub fn to_word(&self) -> BraidWord {
        let letters = self.syllables.iter().flat_map(|&(i, a)| std::iter::repeat_n(i, a)).collect();
        BraidWord::new(self.strands, letters).expect("syllables fit their strands")
    }
}

/// If `x(n-1)` occurs exactly once, rotates it to the end and drops it and
/// the top strand.
pub fn destabilize_once(w: &BraidWord) -> Option<BraidWord> {
    let n = w.strands();
    if n < 2 {
        return None;
    }
    let top = n - 1;
    let positions: Vec<usize> = w.letters().iter().enumerate().filter(|(_, &i)| i == top).map(|(p, _)| p).collect();
    let [p] = positions[..] else { return None };
    let rotated = w.rotate(p + 1);
    let mut letters = rotated.into_letters();
    letters.pop();
    Some(BraidWord::new(n - 1, letters).expect("letters below the top"))
}
