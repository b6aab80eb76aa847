//! Left least common multiples of a generator and a very simple braid, and
//! a breadth-first search oracle that finds them without any formula.

use std::collections::HashSet;

use super::factor::VerySimpleFactor;
use super::normal_form::NormalForm;
use super::word::BraidWord;
use crate::error::{BraidError, Result};

/// The left lcm of `x_i` and a very simple factor, from the case tables.
pub fn left_lcm_formula(strands: usize, i: usize, f: VerySimpleFactor) -> Result<BraidWord> {
    if i == 0 || i >= strands {
        return Err(BraidError::IndexOutOfRange { index: i as i64, strands });
    }
    if !f.is_valid() || f.support().1 >= strands {
        return Err(BraidError::InvalidDecomposition(format!("{f} does not fit on {strands} strands")));
    }
    let mut letters = Vec::new();
    match f {
        VerySimpleFactor::U(a, b) => {
            if i + 1 == a {
                // x_(a-1) D(a,a-1) D(a+1,a) ... D(b,b-1)
                letters.push(i);
                for k in a..=b {
                    letters.extend([k, k - 1]);
                }
            } else if i == a {
                letters.extend(f.letters());
            } else if i > a && i <= b {
                letters.extend(f.letters());
                letters.push(i - 1);
            } else if i == b + 1 {
                // U(a,b) D(b+1,b)
                letters.extend(f.letters());
                letters.extend([b + 1, b]);
            } else {
                letters.push(i);
                letters.extend(f.letters());
            }
        }
        VerySimpleFactor::D(c, d) => {
            if i + 1 == d {
                // x_(d-1) D(c,d-1)
                letters.push(i);
                letters.extend((d - 1..=c).rev());
            } else if i >= d && i < c {
                letters.push(i);
                letters.extend(f.letters());
            } else if i == c {
                letters.extend(f.letters());
            } else if i == c + 1 {
                // D(c,d) D(c+1,d)
                letters.extend(f.letters());
                letters.extend((d..=c + 1).rev());
            } else {
                letters.push(i);
                letters.extend(f.letters());
            }
        }
    }
    BraidWord::new(strands, letters)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LcmSearch {
    Found(NormalForm),
    /// No common multiple of length at most `max_len`.
    BoundHit { max_len: usize },
}

impl LcmSearch {
    pub fn found(self) -> Option<NormalForm> {
        match self {
            LcmSearch::Found(nf) => Some(nf),
            LcmSearch::BoundHit { .. } => None,
        }
    }
}

/// Shortest common right multiple of `a` and `b`, by breadth-first search
/// over `a·ε` for growing `ε`.
///
/// Right multiplications use only generators in the smallest interval
/// containing both supports; lcms never leave that parabolic submonoid.
pub fn brute_force_left_lcm(a: &BraidWord, b: &BraidWord, max_len: usize) -> Result<LcmSearch> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let nb = NormalForm::of_word(b);
    let support: Vec<usize> = a.support().union(&b.support()).copied().collect();
    let alphabet: Vec<usize> = match (support.first(), support.last()) {
        (Some(&lo), Some(&hi)) => (lo..=hi).collect(),
        _ => Vec::new(),
    };

    let mut level: Vec<NormalForm> = vec![NormalForm::of_word(a)];
    let mut length = a.len();
    loop {
        if length > max_len {
            return Ok(LcmSearch::BoundHit { max_len });
        }
        let mut hits: Vec<&NormalForm> = level.iter().filter(|g| nb.left_divides(g)).collect();
        if !hits.is_empty() {
            hits.sort();
            return Ok(LcmSearch::Found(hits[0].clone()));
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for &i in &alphabet {
                let h = g.times_letter(i);
                if seen.insert(h.clone()) {
                    next.push(h);
                }
            }
        }
        if next.is_empty() {
            return Ok(LcmSearch::BoundHit { max_len });
        }
        level = next;
        length += 1;
    }
}

/// Which group of lcm identities an instance belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LcmRule {
    GarsideFar,
    GarsideNear,
    ExtendedA,
    ExtendedB,
    ExtendedC,
    ExtendedD,
    UpA,
    UpB,
    UpC,
    UpD,
    UpE,
    DownA,
    DownB,
    DownC,
    DownD,
    DownE,
}

impl LcmRule {
    pub fn label(self) -> &'static str {
        use LcmRule::*;
        match self {
            GarsideFar => "garside(a)",
            GarsideNear => "garside(b)",
            ExtendedA => "extended(a)",
            ExtendedB => "extended(b)",
            ExtendedC => "extended(c)",
            ExtendedD => "extended(d)",
            UpA => "lcm-U(a)",
            UpB => "lcm-U(b)",
            UpC => "lcm-U(c)",
            UpD => "lcm-U(d)",
            UpE => "lcm-U(e)",
            DownA => "lcm-D(a)",
            DownB => "lcm-D(b)",
            DownC => "lcm-D(c)",
            DownD => "lcm-D(d)",
            DownE => "lcm-D(e)",
        }
    }
}

/// One instance of an lcm identity: `left = right`, and both equal the
/// left lcm of the two operands.
#[derive(Debug, Clone)]
pub struct LcmCase {
    pub rule: LcmRule,
    pub left: BraidWord,
    pub right: BraidWord,
    pub operands: (BraidWord, BraidWord),
    /// Set for the generator/very-simple cases, which also have a formula.
    pub formula: Option<(usize, VerySimpleFactor)>,
}

fn word(n: usize, parts: &[&[usize]]) -> BraidWord {
    BraidWord::from_parts_unchecked(n, parts.concat())
}

fn up(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

fn down(c: usize, d: usize) -> Vec<usize> {
    (d..=c).rev().collect()
}

/// Every instance of the lcm identities on `n` strands.
pub fn lcm_cases(n: usize) -> Vec<LcmCase> {
    use LcmRule::*;
    let top = n.saturating_sub(1);
    let mut out = Vec::new();
    let mut push = |rule, left: BraidWord, right: BraidWord, x: BraidWord, y: BraidWord, formula| {
        out.push(LcmCase { rule, left, right, operands: (x, y), formula });
    };

    for i in 1..=top {
        for j in 1..=top {
            if i.abs_diff(j) >= 2 {
                push(GarsideFar, word(n, &[&[i, j]]), word(n, &[&[j, i]]), word(n, &[&[i]]), word(n, &[&[j]]), None);
            }
        }
        if i < top {
            let j = i + 1;
            push(GarsideNear, word(n, &[&[i, j, i]]), word(n, &[&[j, i, j]]), word(n, &[&[i]]), word(n, &[&[j]]), None);
        }
    }

    for i in 1..=top.saturating_sub(2) {
        let (a, b, c) = (i, i + 1, i + 2);
        push(ExtendedA, word(n, &[&[a, b], &[c, b]]), word(n, &[&[c], &[a, b, c]]), word(n, &[&[a, b]]), word(n, &[&[c]]), None);
        push(ExtendedB, word(n, &[&[a], &[b, a, c, b]]), word(n, &[&[b, c], &[a, b, c]]), word(n, &[&[b, c]]), word(n, &[&[a]]), None);
        push(ExtendedC, word(n, &[&[a], &[c, b, a]]), word(n, &[&[c, b, a], &[b]]), word(n, &[&[c, b]]), word(n, &[&[a]]), None);
        push(ExtendedD, word(n, &[&[b, a], &[c, b, a]]), word(n, &[&[c], &[b, a, c, b]]), word(n, &[&[b, a]]), word(n, &[&[c]]), None);
    }

    for a in 1..=top {
        for b in a + 1..=top {
            let u = up(a, b);
            let f = VerySimpleFactor::U(a, b);
            let uw = word(n, &[&u]);
            for i in 1..=top {
                let xi = word(n, &[&[i]]);
                let (rule, left, right) = if i + 1 < a || i > b + 1 {
                    (UpA, word(n, &[&[i], &u]), word(n, &[&u, &[i]]))
                } else if i + 1 == a {
                    let mut l = vec![i];
                    for k in a..=b {
                        l.extend(down(k, k - 1));
                    }
                    (UpB, word(n, &[&l]), word(n, &[&u, &up(a - 1, b)]))
                } else if i == a {
                    (UpC, uw.clone(), uw.clone())
                } else if i <= b {
                    (UpD, word(n, &[&u, &[i - 1]]), word(n, &[&[i], &u]))
                } else {
                    (UpE, word(n, &[&u, &down(b + 1, b)]), word(n, &[&[b + 1], &up(a, b + 1)]))
                };
                push(rule, left, right, xi, uw.clone(), Some((i, f)));
            }
        }
    }

    for c in 1..=top {
        for d in 1..c {
            let dw = down(c, d);
            let f = VerySimpleFactor::D(c, d);
            let dword = word(n, &[&dw]);
            for i in 1..=top {
                let xi = word(n, &[&[i]]);
                let (rule, left, right) = if i + 1 < d || i > c + 1 {
                    (DownA, word(n, &[&[i], &dw]), word(n, &[&dw, &[i]]))
                } else if i + 1 == d {
                    (DownB, word(n, &[&[i], &down(c, d - 1)]), word(n, &[&dw, &up(d - 1, d)]))
                } else if i < c {
                    (DownC, word(n, &[&[i], &dw]), word(n, &[&dw, &[i + 1]]))
                } else if i == c {
                    (DownD, dword.clone(), dword.clone())
                } else {
                    (DownE, word(n, &[&dw, &down(c + 1, d)]), word(n, &[&[c + 1], &dw, &down(c + 1, d + 1)]))
                };
                push(rule, left, right, xi, dword.clone(), Some((i, f)));
            }
        }
    }
    out
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
    fn formula_examples() {
        let e = left_lcm_formula(4, 3, VerySimpleFactor::U(1, 2)).unwrap();
        assert_eq!(e.letters(), &[1, 2, 3, 2]);
        assert_eq!(NormalForm::of_word(&e), nf(4, &[3, 1, 2, 3]));

        let b = left_lcm_formula(6, 2, VerySimpleFactor::D(5, 3)).unwrap();
        // x_(d-1) D(c,d-1) = D(c,d) U(d-1,d)
        assert_eq!(b.letters(), &[2, 5, 4, 3, 2]);
        assert_eq!(NormalForm::of_word(&b), nf(6, &[5, 4, 3, 2, 3]));

        let c = left_lcm_formula(5, 2, VerySimpleFactor::U(2, 4)).unwrap();
        assert_eq!(c.letters(), &[2, 3, 4]);
    }

    #[test]
    fn brute_force_small_lcms() {
        let x = |i| w(4, &[i]);
        assert_eq!(brute_force_left_lcm(&x(1), &x(3), 10).unwrap(), LcmSearch::Found(nf(4, &[1, 3])));
        assert_eq!(brute_force_left_lcm(&x(1), &x(2), 10).unwrap(), LcmSearch::Found(nf(4, &[1, 2, 1])));
        assert_eq!(brute_force_left_lcm(&x(1), &x(1), 10).unwrap(), LcmSearch::Found(nf(4, &[1])));
        assert_eq!(brute_force_left_lcm(&x(1), &x(2), 2).unwrap(), LcmSearch::BoundHit { max_len: 2 });
    }

    #[test]
    fn formula_rejects_bad_input() {
        assert!(left_lcm_formula(4, 4, VerySimpleFactor::U(1, 2)).is_err());
        assert!(left_lcm_formula(4, 1, VerySimpleFactor::U(2, 4)).is_err());
    }

    #[test]
    fn tables_cover_every_rule() {
        let cases = lcm_cases(7);
        let rules: std::collections::HashSet<_> = cases.iter().map(|c| c.rule).collect();
        assert_eq!(rules.len(), 16);
    }
}
