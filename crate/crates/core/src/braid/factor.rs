use std::fmt;

use serde::Serialize;

use super::word::BraidWord;
use crate::error::{BraidError, Result};

/// Ascending `U(a,b) = x_a x_(a+1) ... x_b` or descending
/// `D(c,d) = x_c x_(c-1) ... x_d` with `c > d`. A single generator is `U(k,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VerySimpleFactor {
    U(usize, usize),
    D(usize, usize),
}

impl VerySimpleFactor {
    pub fn up(a: usize, b: usize) -> Result<Self> {
        if a == 0 || a > b {
            return Err(BraidError::InvalidDecomposition(format!("U({a},{b}) needs 1 <= a <= b")));
        }
        Ok(VerySimpleFactor::U(a, b))
    }

    pub fn down(c: usize, d: usize) -> Result<Self> {
        if d == 0 || c <= d {
            return Err(BraidError::InvalidDecomposition(format!("D({c},{d}) needs 1 <= d < c")));
        }
        Ok(VerySimpleFactor::D(c, d))
    }

    pub fn is_valid(self) -> bool {
        match self {
            VerySimpleFactor::U(a, b) => a >= 1 && a <= b,
            VerySimpleFactor::D(c, d) => d >= 1 && c > d,
        }
    }

    pub fn is_up(self) -> bool {
        matches!(self, VerySimpleFactor::U(..))
    }

    /// Support as the interval `[low, high]`.
    pub fn support(self) -> (usize, usize) {
        match self {
            VerySimpleFactor::U(a, b) => (a, b),
            VerySimpleFactor::D(c, d) => (d, c),
        }
    }

    pub fn first_letter(self) -> usize {
        match self {
            VerySimpleFactor::U(a, _) => a,
            VerySimpleFactor::D(c, _) => c,
        }
    }

    pub fn letters(self) -> Vec<usize> {
        match self {
            VerySimpleFactor::U(a, b) => (a..=b).collect(),
            VerySimpleFactor::D(c, d) => (d..=c).rev().collect(),
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        let (lo, hi) = self.support();
        hi - lo + 1
    }

    pub fn to_word(self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters())
    }
}

impl fmt::Display for VerySimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerySimpleFactor::U(a, b) => write!(f, "U({a},{b})"),
            VerySimpleFactor::D(c, d) => write!(f, "D({c},{d})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_and_support() {
        assert_eq!(VerySimpleFactor::U(2, 4).letters(), vec![2, 3, 4]);
        assert_eq!(VerySimpleFactor::D(4, 2).letters(), vec![4, 3, 2]);
        assert_eq!(VerySimpleFactor::D(8, 6).support(), (6, 8));
        assert!(VerySimpleFactor::down(3, 3).is_err());
        assert!(VerySimpleFactor::up(3, 3).is_ok());
        assert_eq!(VerySimpleFactor::U(3, 3).to_string(), "U(3,3)");
    }
}
