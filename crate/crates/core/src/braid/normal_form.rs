//! Left-greedy normal form in the positive braid monoid.
//!
//! A positive braid is stored as a sequence of non-trivial permutation braids
//! `s_1 s_2 ... s_k` in which every adjacent pair is left-weighted: the
//! starting set of `s_(j+1)` is contained in the finishing set of `s_j`.
//! This factorization is unique, so it serves as the equality oracle.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::Serialize;

use super::divisor::permutation_to_divisor;
use super::perm::Permutation;
use super::word::BraidWord;
use crate::error::{BraidError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    strands: usize,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn unit(strands: usize) -> Self {
        NormalForm { strands, factors: Vec::new() }
    }

    pub fn of_word(word: &BraidWord) -> Self {
        let mut nf = NormalForm::unit(word.strands());
        for &i in word.letters() {
            nf.push_letter(i);
        }
        nf
    }

    /// The braid of a single permutation (a divisor of the Garside element).
    pub fn of_permutation(p: &Permutation) -> Self {
        let mut nf = NormalForm::unit(p.strands());
        nf.push_simple(p.clone());
        nf
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.len() <= 1
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(Permutation::length).sum()
    }

    /// Canonical word: the concatenation of the `(*)` words of the factors.
    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::with_capacity(self.degree());
        for f in &self.factors {
            letters.extend_from_slice(permutation_to_divisor(f).letters());
        }
        BraidWord::from_parts_unchecked(self.strands, letters)
    }

    /// Generators that left-divide the braid: the starting set of the first factor.
    pub fn initial_set(&self) -> BTreeSet<usize> {
        self.factors.first().map(Permutation::starting_set).unwrap_or_default()
    }

    pub fn permutation(&self) -> Permutation {
        self.factors.iter().fold(Permutation::identity(self.strands), |acc, f| acc.then(f))
    }

    pub(crate) fn push_letter(&mut self, i: usize) {
        let mut x = Permutation::identity(self.strands);
        x.push_letter(i);
        self.push_simple(x);
    }

    /// Right multiplication by a permutation braid.
    pub(crate) fn push_simple(&mut self, s: Permutation) {
        debug_assert_eq!(s.strands(), self.strands);
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        loop {
            let mut changed = false;
            for k in (1..self.factors.len()).rev() {
                let (left, right) = self.factors.split_at_mut(k);
                changed |= left_weight(&mut left[k - 1], &mut right[0]);
            }
            let before = self.factors.len();
            self.factors.retain(|f| !f.is_identity());
            if !changed && before == self.factors.len() {
                break;
            }
        }
    }

    pub fn multiply(&self, other: &NormalForm) -> Result<NormalForm> {
        check_strands(self.strands, other.strands)?;
        let mut out = self.clone();
        for f in &other.factors {
            out.push_simple(f.clone());
        }
        Ok(out)
    }

    /// `self · x_i`.
    pub fn times_letter(&self, i: usize) -> NormalForm {
        let mut out = self.clone();
        out.push_letter(i);
        out
    }

    /// `d⁻¹ · self` when `d` left-divides `self`.
    pub fn left_quotient(&self, d: &NormalForm) -> Option<NormalForm> {
        if d.strands != self.strands {
            return None;
        }
        let mut current = self.clone();
        for f in &d.factors {
            current = current.left_quotient_simple(f)?;
        }
        Some(current)
    }

    /// `s⁻¹ · self` for a permutation braid `s`, when it left-divides.
    pub fn left_quotient_simple(&self, s: &Permutation) -> Option<NormalForm> {
        if s.is_identity() {
            return Some(self.clone());
        }
        // a simple element divides a braid iff it divides its first factor
        let first = self.factors.first()?;
        if !s.left_divides(first) {
            return None;
        }
        let rest = s.inverse().then(first);
        let mut out = NormalForm::unit(self.strands);
        out.push_simple(rest);
        for f in &self.factors[1..] {
            out.push_simple(f.clone());
        }
        Some(out)
    }

    pub fn left_divides(&self, other: &NormalForm) -> bool {
        other.left_quotient(self).is_some()
    }

    /// Same braid on more strands (extra strands fixed on top).
    pub fn embed(&self, strands: usize) -> NormalForm {
        assert!(strands >= self.strands);
        NormalForm { strands, factors: self.factors.iter().map(|f| f.embed(strands)).collect() }
    }

    /// Same braid on fewer strands, if the top strands are untouched.
    pub fn restrict(&self, strands: usize) -> Option<NormalForm> {
        let factors = self.factors.iter().map(|f| f.restrict(strands)).collect::<Option<Vec<_>>>()?;
        Some(NormalForm { strands, factors })
    }

    /// A word for the braid that contains some `x_i x_i`, if the braid is not square-free.
    pub fn square_witness_word(&self) -> Option<BraidWord> {
        if self.factors.len() < 2 {
            return None;
        }
        let a = &self.factors[0];
        let b = &self.factors[1];
        // left-weightedness guarantees such an index
        let i = *b.starting_set().iter().next()?;
        debug_assert!(a.ends_with(i));
        let mut a_head = a.clone();
        a_head.push_letter(i);
        let mut b_tail = b.clone();
        b_tail.pop_front_letter(i);
        let mut letters = permutation_to_divisor(&a_head).into_letters();
        letters.push(i);
        letters.push(i);
        letters.extend(permutation_to_divisor(&b_tail).into_letters());
        for f in &self.factors[2..] {
            letters.extend(permutation_to_divisor(f).into_letters());
        }
        Some(BraidWord::from_parts_unchecked(self.strands, letters))
    }
}

/// Moves letters from the front of `b` to the end of `a` until the pair is
/// left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.strands();
    let mut changed = false;
    'outer: loop {
        for i in 1..n {
            if b.starts_with(i) && !a.ends_with(i) {
                a.push_letter(i);
                b.pop_front_letter(i);
                changed = true;
                continue 'outer;
            }
        }
        return changed;
    }
}

fn check_strands(left: usize, right: usize) -> Result<()> {
    if left != right {
        Err(BraidError::StrandMismatch { left, right })
    } else {
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF{}{:?}", self.strands, self.factors)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|p| format!("{}", permutation_to_divisor(p))).collect();
        write!(f, "[{}]", parts.join(" | "))
    }
}

/// Serializes as the list of factor image lists.
impl Serialize for NormalForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.factors.len()))?;
        for f in &self.factors {
            seq.serialize_element(&f.images())?;
        }
        seq.end()
    }
}

pub fn normal_form(word: &BraidWord) -> NormalForm {
    NormalForm::of_word(word)
}

pub fn multiply(a: &BraidWord, b: &BraidWord) -> Result<NormalForm> {
    check_strands(a.strands(), b.strands())?;
    NormalForm::of_word(a).multiply(&NormalForm::of_word(b))
}

pub fn left_divides(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    check_strands(a.strands(), b.strands())?;
    Ok(NormalForm::of_word(a).left_divides(&NormalForm::of_word(b)))
}

pub fn right_divides(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    left_divides(&a.reverse(), &b.reverse())
}

/// `b = a · q`: returns `q` when `a` left-divides `b`.
pub fn left_quotient(b: &BraidWord, a: &BraidWord) -> Result<Option<NormalForm>> {
    check_strands(a.strands(), b.strands())?;
    Ok(NormalForm::of_word(b).left_quotient(&NormalForm::of_word(a)))
}

/// `b = q · a`: returns `q` when `a` right-divides `b`.
pub fn right_quotient(b: &BraidWord, a: &BraidWord) -> Result<Option<NormalForm>> {
    let q = left_quotient(&b.reverse(), &a.reverse())?;
    Ok(q.map(|q| NormalForm::of_word(&q.to_word().reverse())))
}

pub fn is_square_free(word: &BraidWord) -> bool {
    NormalForm::of_word(word).is_square_free()
}

pub fn initial_set(word: &BraidWord) -> BTreeSet<usize> {
    NormalForm::of_word(word).initial_set()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[usize]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn nf(n: usize, l: &[usize]) -> NormalForm {
        NormalForm::of_word(&w(n, l))
    }

    #[test]
    fn braid_relation_identifies() {
        assert_eq!(nf(3, &[1, 2, 1]), nf(3, &[2, 1, 2]));
        assert_eq!(nf(3, &[1, 2, 1]).factor_count(), 1);
        assert_eq!(nf(3, &[1, 2, 1]).factors()[0], Permutation::reversal(3));
        assert_ne!(nf(3, &[1, 2]), nf(3, &[2, 1]));
        assert_eq!(nf(4, &[1, 3]), nf(4, &[3, 1]));
    }

    #[test]
    fn square_detection() {
        assert!(nf(4, &[3, 2, 1, 3, 2, 1]).factor_count() >= 2);
        assert!(nf(4, &[2, 1, 3, 2, 1, 3]).is_square_free());
        assert_eq!(nf(4, &[3, 2, 1, 3, 2, 1]), nf(4, &[2, 1, 3, 2, 1, 1]));
        assert!(nf(5, &[]).is_unit());
    }

    #[test]
    fn products() {
        assert_eq!(multiply(&BraidWord::unit(3), &w(3, &[1, 2])).unwrap(), nf(3, &[1, 2]));
        assert_eq!(multiply(&w(3, &[1]), &w(3, &[2, 1])).unwrap(), nf(3, &[1, 2, 1]));
        assert_eq!(multiply(&w(4, &[2, 1, 3, 2]), &w(4, &[1, 3])).unwrap(), nf(4, &[1, 2, 1, 3, 2, 1]));
        assert!(multiply(&w(3, &[1]), &w(4, &[1])).is_err());
    }

    #[test]
    fn divisibility() {
        assert!(left_divides(&w(3, &[1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(left_divides(&w(3, &[1]), &w(3, &[1, 2])).unwrap());
        assert!(!left_divides(&w(4, &[3]), &w(4, &[1, 2])).unwrap());
        assert!(!left_divides(&w(3, &[2]), &w(3, &[1, 2])).unwrap());
        assert!(right_divides(&w(3, &[2]), &w(3, &[1, 2])).unwrap());
        assert!(left_divides(&w(3, &[1, 2]), &w(3, &[2])).is_ok_and(|b| !b));
    }

    #[test]
    fn initial_sets() {
        assert_eq!(initial_set(&w(3, &[1, 2, 1])), [1, 2].into_iter().collect());
        assert_eq!(initial_set(&w(3, &[2, 1])), [2].into_iter().collect());
        assert!(initial_set(&BraidWord::unit(3)).is_empty());
    }

    #[test]
    fn quotients() {
        let q = left_quotient(&w(3, &[1, 1, 2]), &w(3, &[1])).unwrap().unwrap();
        assert_eq!(q, nf(3, &[1, 2]));
        let q = right_quotient(&w(3, &[1, 2, 1]), &w(3, &[2])).unwrap().unwrap();
        assert_eq!(q, nf(3, &[2, 1]));
        assert!(left_quotient(&w(3, &[1, 2]), &w(3, &[2])).unwrap().is_none());
    }

    #[test]
    fn witness_word() {
        let b = nf(4, &[3, 2, 1, 3, 2, 1]);
        let wit = b.square_witness_word().unwrap();
        assert!(wit.has_adjacent_square());
        assert_eq!(NormalForm::of_word(&wit), b);
        assert!(nf(3, &[1, 2, 1]).square_witness_word().is_none());
    }

    #[test]
    fn embed_restrict() {
        let b = nf(3, &[1, 2, 1, 1]);
        let e = b.embed(5);
        assert_eq!(e, nf(5, &[1, 2, 1, 1]));
        assert_eq!(e.restrict(3).unwrap(), b);
        assert!(nf(4, &[3]).restrict(3).is_none());
    }
}
