//! Brute-force reference computations used to check the fast algorithms,
//! plus seeded samplers for random braids.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::{enumerate_divisors_bounded, left_divides, BraidWord, NormalForm, Permutation};
use crate::error::Result;
use crate::simple::is_literally_simple;

/// All words of length exactly `len` over `x1 .. x(n-1)`, in lexicographic order.
pub fn all_words(n: usize, len: usize) -> Vec<BraidWord> {
    let g = n.saturating_sub(1);
    if g == 0 {
        return if len == 0 { vec![BraidWord::unit(n)] } else { Vec::new() };
    }
    let mut out = Vec::with_capacity(g.pow(len as u32));
    let mut letters = vec![1; len];
    loop {
        out.push(BraidWord::new(n, letters.clone()).expect("letters in range"));
        let Some(k) = (0..len).rev().find(|&k| letters[k] < g) else { break };
        letters[k] += 1;
        for l in &mut letters[k + 1..] {
            *l = 1;
        }
    }
    out
}

pub fn all_words_up_to(n: usize, max_len: usize) -> Vec<BraidWord> {
    (0..=max_len).flat_map(|len| all_words(n, len)).collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Classes of words under Artin rewrites (`x_i x_j = x_j x_i` for `|i-j| >= 2`
/// and `x_i x_(i+1) x_i = x_(i+1) x_i x_(i+1)`), by union-find over the given
/// words. The list must be closed under rewrites, e.g. all words of each length.
pub fn artin_classes(words: &[BraidWord]) -> Vec<usize> {
    let index: HashMap<&[usize], usize> = words.iter().enumerate().map(|(k, w)| (w.letters(), k)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    for (k, w) in words.iter().enumerate() {
        let l = w.letters();
        let mut neighbours = Vec::new();
        for p in 0..l.len().saturating_sub(1) {
            if l[p].abs_diff(l[p + 1]) >= 2 {
                let mut m = l.to_vec();
                m.swap(p, p + 1);
                neighbours.push(m);
            }
            if p + 2 < l.len() && l[p] == l[p + 2] && l[p].abs_diff(l[p + 1]) == 1 {
                let mut m = l.to_vec();
                m[p] = l[p + 1];
                m[p + 1] = l[p];
                m[p + 2] = l[p + 1];
                neighbours.push(m);
            }
        }
        for m in neighbours {
            let j = index[m.as_slice()];
            let (a, b) = (find(&mut parent, k), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..words.len()).map(|k| find(&mut parent, k)).collect()
}

/// Length-lexicographically smallest word with permutation `p` among words
/// of length equal to the number of inversions, by exhaustive enumeration.
pub fn minimal_reduced_word(p: &Permutation) -> BraidWord {
    let n = p.strands();
    all_words(n, p.length())
        .into_iter()
        .find(|w| Permutation::of_letters(n, w.letters()) == *p)
        .expect("every permutation has a reduced word")
}

/// `{i : x_i left-divides w}` by testing each generator.
pub fn brute_initial_set(w: &BraidWord) -> BTreeSet<usize> {
    let n = w.strands();
    (1..n)
        .filter(|&i| left_divides(&BraidWord::new(n, vec![i]).expect("in range"), w).expect("same strands"))
        .collect()
}

/// Literally simple divisors of `Δ_n`, in normal form order.
pub fn literally_simple_braids(n: usize) -> Result<Vec<NormalForm>> {
    Ok(enumerate_divisors_bounded(n, usize::MAX)?
        .into_iter()
        .filter(|d| is_literally_simple(&d.to_word()))
        .collect())
}

pub fn random_word(rng: &mut impl Rng, n: usize, len: usize) -> BraidWord {
    let letters = if n < 2 { Vec::new() } else { (0..len).map(|_| rng.gen_range(1..n)).collect() };
    BraidWord::new(n, letters).expect("letters in range")
}

/// A random subset of the generators in random order.
pub fn random_simple_braid(rng: &mut impl Rng, n: usize) -> BraidWord {
    let mut letters: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.5)).collect();
    letters.shuffle(rng);
    BraidWord::new(n, letters).expect("letters in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn word_enumeration() {
        assert_eq!(all_words(4, 2).len(), 9);
        assert_eq!(all_words(3, 0), vec![BraidWord::unit(3)]);
        assert_eq!(all_words_up_to(3, 3).len(), 15);
        assert_eq!(all_words(1, 1).len(), 0);
    }

    #[test]
    fn artin_closure() {
        let words = all_words(3, 3);
        let classes = artin_classes(&words);
        let pos = |l: &[usize]| words.iter().position(|w| w.letters() == l).unwrap();
        assert_eq!(classes[pos(&[1, 2, 1])], classes[pos(&[2, 1, 2])]);
        assert_ne!(classes[pos(&[1, 1, 2])], classes[pos(&[1, 2, 1])]);
    }

    #[test]
    fn reduced_words() {
        assert_eq!(minimal_reduced_word(&Permutation::reversal(3)).letters(), &[1, 2, 1]);
        assert!(minimal_reduced_word(&Permutation::identity(3)).is_empty());
    }

    #[test]
    fn samplers_are_simple() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert!(is_literally_simple(&random_simple_braid(&mut rng, 8)));
        }
    }
}
