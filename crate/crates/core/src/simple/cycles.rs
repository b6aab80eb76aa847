//! Literally simple braids and their decomposition into disjoint cycles.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::braid::{divisor_canonical_form, BraidWord, NormalForm, VerySimpleFactor};
use crate::error::{BraidError, Result};

/// Every generator used at most once. Length and support do not depend on
/// the representative, so any word of the braid decides it.
pub fn is_literally_simple(w: &BraidWord) -> bool {
    w.len() == w.support().len()
}

/// The block criterion: square-free, and the canonical blocks `(k_h, j_h)`
/// satisfy `j_(h+1) > k_h`.
pub fn satisfies_block_criterion(w: &BraidWord) -> bool {
    match divisor_canonical_form(w) {
        Ok(blocks) => blocks.windows(2).all(|p| p[1].j > p[0].k),
        Err(_) => false,
    }
}

/// A product of very simple factors with consecutive supports and no two
/// consecutive `U` factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    factors: Vec<VerySimpleFactor>,
}

impl Cycle {
    pub fn new(factors: Vec<VerySimpleFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(BraidError::InvalidDecomposition("a cycle needs at least one factor".into()));
        }
        if let Some(f) = factors.iter().find(|f| !f.is_valid()) {
            return Err(BraidError::InvalidDecomposition(format!("invalid factor {f}")));
        }
        for pair in factors.windows(2) {
            if pair[0].support().1 + 1 != pair[1].support().0 {
                return Err(BraidError::InvalidDecomposition(format!(
                    "supports of {} and {} are not consecutive",
                    pair[0], pair[1]
                )));
            }
            if pair[0].is_up() && pair[1].is_up() {
                return Err(BraidError::InvalidDecomposition(format!("consecutive U factors {} {}", pair[0], pair[1])));
            }
        }
        Ok(Cycle { factors })
    }

    pub fn factors(&self) -> &[VerySimpleFactor] {
        &self.factors
    }

    pub fn support(&self) -> (usize, usize) {
        (self.factors[0].support().0, self.factors[self.factors.len() - 1].support().1)
    }

    /// Number of strands the cycle permutes.
    pub fn size(&self) -> usize {
        let (b, e) = self.support();
        e - b + 2
    }

    pub fn letters(&self) -> Vec<usize> {
        self.factors.iter().flat_map(|f| f.letters()).collect()
    }

    /// First letter of the first factor and of every `D` factor.
    pub fn initial_set(&self) -> BTreeSet<usize> {
        let mut out: BTreeSet<usize> =
            self.factors.iter().filter(|f| !f.is_up()).map(|f| f.first_letter()).collect();
        out.insert(self.factors[0].first_letter());
        out
    }

    pub fn is_ascending(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].is_up()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Increasing product of pairwise disjoint cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    strands: usize,
    cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn new(strands: usize, cycles: Vec<Cycle>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::InvalidStrands(0));
        }
        for pair in cycles.windows(2) {
            let (_, e) = pair[0].support();
            let (b, _) = pair[1].support();
            if b < e + 2 {
                return Err(BraidError::InvalidDecomposition(format!("cycles {} and {} are not disjoint", pair[0], pair[1])));
            }
        }
        if let Some(last) = cycles.last() {
            if last.support().1 >= strands {
                return Err(BraidError::InvalidDecomposition(format!("{last} does not fit on {strands} strands")));
            }
        }
        Ok(CycleDecomposition { strands, cycles })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for CycleDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn cycle_decomposition(w: &BraidWord) -> Result<CycleDecomposition> {
    if !is_literally_simple(w) {
        return Err(BraidError::NotLiterallySimple);
    }
    let blocks = divisor_canonical_form(w)?;
    let mut cycles: Vec<Vec<VerySimpleFactor>> = Vec::new();
    for block in blocks {
        let factor = if block.k > block.j {
            VerySimpleFactor::D(block.k, block.j)
        } else {
            VerySimpleFactor::U(block.k, block.k)
        };
        let (lo, _) = factor.support();
        let joins = cycles.last().and_then(|c| c.last()).is_some_and(|f| f.support().1 + 1 == lo);
        if !joins {
            cycles.push(vec![factor]);
            continue;
        }
        let current = cycles.last_mut().expect("nonempty");
        match (current.last_mut(), factor) {
            (Some(VerySimpleFactor::U(_, b)), VerySimpleFactor::U(_, k)) => *b = k,
            _ => current.push(factor),
        }
    }
    let cycles = cycles.into_iter().map(Cycle::new).collect::<Result<Vec<_>>>()?;
    CycleDecomposition::new(w.strands(), cycles)
}

pub fn cycles_to_braid(d: &CycleDecomposition) -> BraidWord {
    let letters = d.cycles.iter().flat_map(Cycle::letters).collect();
    BraidWord::new(d.strands, letters).expect("validated decomposition fits its strands")
}

pub fn cycle_initial_set(d: &CycleDecomposition) -> BTreeSet<usize> {
    d.cycles.iter().flat_map(Cycle::initial_set).collect()
}

/// Canonical decomposition of the braid represented by a normal form.
pub fn decompose_normal_form(nf: &NormalForm) -> Result<CycleDecomposition> {
    cycle_decomposition(&nf.to_word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use VerySimpleFactor::{D, U};

    fn w(n: usize, l: &[usize]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn literal_simplicity() {
        assert!(!is_literally_simple(&w(4, &[2, 1, 3, 2, 1, 3])));
        assert!(!is_literally_simple(&w(3, &[1, 2, 1])));
        assert!(is_literally_simple(&w(5, &[2, 1, 3, 4])));
        assert!(is_literally_simple(&BraidWord::unit(3)));
        assert!(satisfies_block_criterion(&w(5, &[2, 1, 3, 4])));
        assert!(!satisfies_block_criterion(&w(3, &[1, 2, 1])));
    }

    #[test]
    fn decompositions() {
        let d = cycle_decomposition(&w(5, &[2, 1, 3, 4])).unwrap();
        assert_eq!(d.cycles(), &[Cycle::new(vec![D(2, 1), U(3, 4)]).unwrap()]);
        assert_eq!(d.to_string(), "[D(2,1) U(3,4)]");

        let d = cycle_decomposition(&w(11, &[7, 6, 10, 9, 8])).unwrap();
        assert_eq!(d.to_string(), "[D(7,6) D(10,8)]");

        let d = cycle_decomposition(&w(13, &[1, 2, 3, 5, 6, 8, 10])).unwrap();
        assert_eq!(d.to_string(), "[U(1,3)][U(5,6)][U(8,8)][U(10,10)]");
        assert!(cycle_decomposition(&w(3, &[1, 2, 1])).is_err());
        assert!(cycle_decomposition(&BraidWord::unit(4)).unwrap().cycles().is_empty());
    }

    #[test]
    fn products_of_cycles() {
        let d = CycleDecomposition::new(
            8,
            vec![Cycle::new(vec![U(1, 3)]).unwrap(), Cycle::new(vec![U(5, 6)]).unwrap()],
        )
        .unwrap();
        assert_eq!(cycles_to_braid(&d).letters(), &[1, 2, 3, 5, 6]);
        assert!(Cycle::new(vec![U(1, 2), U(3, 4)]).is_err());
        assert!(Cycle::new(vec![U(1, 2), D(5, 4)]).is_err());
        assert!(CycleDecomposition::new(
            8,
            vec![Cycle::new(vec![U(1, 3)]).unwrap(), Cycle::new(vec![U(4, 6)]).unwrap()]
        )
        .is_err());
        assert!(cycles_to_braid(&CycleDecomposition::new(4, vec![]).unwrap()).is_empty());
    }

    #[test]
    fn initial_sets_of_cycles() {
        let alpha = CycleDecomposition::new(
            18,
            vec![
                Cycle::new(vec![U(2, 4), D(6, 5), D(9, 7), U(10, 11)]).unwrap(),
                Cycle::new(vec![U(13, 14), D(17, 15)]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(cycle_initial_set(&alpha), [2, 6, 9, 13, 17].into_iter().collect());
        let g = cycle_decomposition(&w(5, &[2, 1, 3, 4])).unwrap();
        assert_eq!(cycle_initial_set(&g), [2].into_iter().collect());
    }
}
