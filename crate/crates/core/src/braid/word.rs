//! Words in the free monoid on `x1, ..., x(n-1)` and the letterwise
//! operations on them (flip, reversal, shift, supports).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

/// A positive braid word on a fixed number of strands.
///
/// Letters are generator indices `i` with `1 <= i <= strands - 1`; the empty
/// word is the unit braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::InvalidStrands(0));
        }
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= strands) {
            return Err(BraidError::IndexOutOfRange { index: bad as i64, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().all(|&i| i >= 1 && i < strands));
        BraidWord { strands, letters }
    }

    /// The unit braid `1_n`.
    pub fn unit(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    /// Parses `x1 x2^3 x1`, `1.2.1` or `x1x2` style input.
    ///
    /// Without an explicit strand count the word lives on `max index + 1`
    /// strands (one strand for the empty word).
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let letters = parse_letters(text)?;
        let needed = letters.iter().copied().max().map_or(1, |m| m + 1);
        let strands = match strands {
            Some(0) => return Err(BraidError::InvalidStrands(0)),
            Some(n) => {
                if needed > n {
                    let bad = letters.iter().copied().find(|&i| i >= n).unwrap_or(needed - 1);
                    return Err(BraidError::IndexOutOfRange { index: bad as i64, strands: n });
                }
                n
            }
            None => needed,
        };
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.letters
    }

    /// Word length, i.e. the degree of the braid.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, index: usize) -> usize {
        self.letters.iter().filter(|&&i| i == index).count()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn push(&mut self, index: usize) -> Result<()> {
        if index == 0 || index >= self.strands {
            return Err(BraidError::IndexOutOfRange { index: index as i64, strands: self.strands });
        }
        self.letters.push(index);
        Ok(())
    }

    /// The same letters viewed on a different number of strands.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Letterwise `x_i -> x_(n-i)`, the conjugation by the Garside element.
    pub fn flip(&self) -> BraidWord {
        let n = self.strands;
        BraidWord { strands: n, letters: self.letters.iter().map(|&i| n - i).collect() }
    }

    pub fn reverse(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        BraidWord { strands: self.strands, letters }
    }

    /// Letterwise `x_i -> x_(i+k)` onto `new_strands` strands.
    pub fn shift(&self, k: i64, new_strands: usize) -> Result<BraidWord> {
        if new_strands == 0 {
            return Err(BraidError::InvalidStrands(0));
        }
        let letters = self
            .letters
            .iter()
            .map(|&i| {
                let j = i as i64 + k;
                if j < 1 || j >= new_strands as i64 {
                    Err(BraidError::IndexOutOfRange { index: j, strands: new_strands })
                } else {
                    Ok(j as usize)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord { strands: new_strands, letters })
    }

    /// Rotation `w = u v -> v u` with `|u| = k`; conjugation by `u`.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Generators occurring in the word. Artin rewrites never change this set.
    pub fn support(&self) -> BTreeSet<usize> {
        self.letters.iter().copied().collect()
    }

    /// Connected components of the support as closed intervals `[a, b]`.
    pub fn support_blocks(&self) -> Vec<(usize, usize)> {
        intervals(&self.support())
    }

    /// Each support block `[a, b]` widened to `[max(1, a-1), min(b+1, n-1)]`.
    pub fn extended_support(&self) -> Vec<(usize, usize)> {
        let top = self.strands.saturating_sub(1);
        self.support_blocks()
            .into_iter()
            .map(|(a, b)| (a.saturating_sub(1).max(1), (b + 1).min(top)))
            .collect()
    }

    pub fn has_full_support(&self) -> bool {
        self.support().len() == self.strands - 1
    }

    /// True if two equal letters sit next to each other.
    pub fn has_adjacent_square(&self) -> bool {
        self.letters.windows(2).any(|p| p[0] == p[1])
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "x{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// Splits a sorted set of integers into maximal runs of consecutive values.
pub fn intervals(set: &BTreeSet<usize>) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &i in set {
        match out.last_mut() {
            Some((_, hi)) if *hi + 1 == i => *hi = i,
            _ => out.push((i, i)),
        }
    }
    out
}

fn parse_letters(text: &str) -> Result<Vec<usize>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut letters = Vec::new();
    let mut need_sep = false;

    let skip_sep = |pos: &mut usize| -> bool {
        let start = *pos;
        while *pos < bytes.len() && (bytes[*pos].is_ascii_whitespace() || bytes[*pos] == b'.') {
            *pos += 1;
        }
        *pos > start
    };

    skip_sep(&mut pos);
    while pos < bytes.len() {
        let term_start = pos;
        let has_x = matches!(bytes[pos], b'x' | b'X');
        if need_sep && !has_x {
            return Err(syntax(pos, "expected a separator"));
        }
        if has_x {
            pos += 1;
        }
        let index = read_int(bytes, &mut pos).ok_or_else(|| syntax(pos, "expected a generator index"))?;
        if index == 0 {
            return Err(syntax(term_start, "generator index must be at least 1"));
        }
        let mut exponent = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let exp_pos = pos;
            exponent = read_int(bytes, &mut pos).ok_or_else(|| syntax(pos, "expected an exponent"))?;
            if exponent == 0 {
                return Err(syntax(exp_pos, "exponent must be at least 1"));
            }
        }
        letters.extend(std::iter::repeat_n(index, exponent));
        need_sep = !skip_sep(&mut pos);
    }
    Ok(letters)
}

fn read_int(bytes: &[u8], pos: &mut usize) -> Option<usize> {
    let start = *pos;
    let mut value: usize = 0;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        value = value.checked_mul(10)?.checked_add((bytes[*pos] - b'0') as usize)?;
        *pos += 1;
    }
    (*pos > start).then_some(value)
}

fn syntax(position: usize, message: &str) -> BraidError {
    BraidError::Syntax { position, message: message.to_string() }
}
