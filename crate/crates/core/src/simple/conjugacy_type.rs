//! Conjugacy type `A` of a simple braid and the canonical block word `β_A`.

use std::fmt;

use serde::{Serialize, Serializer};

use super::cycles::cycle_decomposition;
use crate::braid::BraidWord;
use crate::error::{BraidError, Result};

/// Decreasing cycle sizes `a_1 >= ... >= a_r >= 2` on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjugacyType {
    sizes: Vec<usize>,
    strands: usize,
}

impl ConjugacyType {
    pub fn new(sizes: Vec<usize>, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::InvalidStrands(0));
        }
        if sizes.iter().any(|&a| a < 2) {
            return Err(BraidError::InvalidConjugacyType(format!("{sizes:?} has a part below 2")));
        }
        if sizes.windows(2).any(|p| p[0] < p[1]) {
            return Err(BraidError::InvalidConjugacyType(format!("{sizes:?} is not decreasing")));
        }
        let total: usize = sizes.iter().sum();
        if total > strands {
            return Err(BraidError::InvalidConjugacyType(format!("{sizes:?} needs {total} > {strands} strands")));
        }
        Ok(ConjugacyType { sizes, strands })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn trivial_strands(&self) -> usize {
        self.strands - self.sizes.iter().sum::<usize>()
    }

    /// Components of the closure.
    pub fn components(&self) -> usize {
        self.sizes.len() + self.trivial_strands()
    }
}

impl fmt::Display for ConjugacyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(ToString::to_string).collect();
        write!(f, "A=({}); n={}; trivial={}", parts.join(","), self.strands, self.trivial_strands())
    }
}

impl Serialize for ConjugacyType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn conjugacy_type(w: &BraidWord) -> Result<ConjugacyType> {
    let d = cycle_decomposition(w)?;
    let mut sizes: Vec<usize> = d.cycles().iter().map(|c| c.size()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    ConjugacyType::new(sizes, w.strands())
}

/// `(x1 ... x(s1-1)) (x(s1+1) ... x(s2-1)) ...` with `s_i = a_1 + ... + a_i`.
pub fn canonical_conjugacy_word(t: &ConjugacyType) -> BraidWord {
    let mut letters = Vec::new();
    let mut s = 0;
    for &a in &t.sizes {
        letters.extend(s + 1..s + a);
        s += a;
    }
    BraidWord::new(t.strands, letters).expect("sizes fit the strand count")
}
