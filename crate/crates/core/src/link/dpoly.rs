//! The D polynomial of the closure of a positive braid, and the decision
//! whether that closure is a trivial link.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::closure::{closure_components, destabilize_once, is_split_diagram, split_support, SyllableWord};
use super::laurent::{rational, LaurentPolynomial};
use crate::braid::{BraidWord, NormalForm};
use crate::conjugacy::{find_square_conjugate_with, SearchLimits};
use crate::error::{BraidError, Result};
use crate::simple::is_literally_simple;

pub fn mu_power(k: usize) -> LaurentPolynomial {
    LaurentPolynomial::mu().pow(k as i64).expect("non-negative power")
}

/// `D(x1^a)` on two strands: `((1-a) s^(a+1) + (1+a) s^(a-1)) / 2`.
pub fn d_two_strand(a: u32) -> LaurentPolynomial {
    let a = a as i64;
    LaurentPolynomial::from_terms([
        (a as i32 + 1, rational(1 - a, 2)),
        (a as i32 - 1, rational(1 + a, 2)),
    ])
}

/// Memoized evaluator; reuse one across calls to share the table.
#[derive(Debug, Default)]
pub struct DEvaluator {
    memo: HashMap<NormalForm, LaurentPolynomial>,
    limits: SearchLimits,
}

impl DEvaluator {
    pub fn new(limits: SearchLimits) -> Self {
        DEvaluator { memo: HashMap::new(), limits }
    }

    pub fn evaluate(&mut self, w: &BraidWord) -> Result<LaurentPolynomial> {
        let key = NormalForm::of_word(w);
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        let value = self.compute(w, &key)?;
        if self.memo.len() >= self.limits.max_orbit {
            return Err(BraidError::BoundExceeded { what: "D memo", limit: self.limits.max_orbit });
        }
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    fn compute(&mut self, w: &BraidWord, nf: &NormalForm) -> Result<LaurentPolynomial> {
        let n = w.strands();
        if w.is_empty() {
            return Ok(mu_power(n - 1));
        }

        let groups = split_support(w);
        if groups.len() > 1 {
            let mut out = mu_power(groups.len() - 1);
            for (g, _) in &groups {
                out = &out * &self.evaluate(g)?;
            }
            return Ok(out);
        }

        let canonical = nf.to_word();
        if let Some(smaller) = destabilize_once(w).or_else(|| destabilize_once(&canonical)) {
            return self.evaluate(&smaller);
        }

        let syllables = SyllableWord::cyclically_merged(w);
        if let Some(j) = syllables.syllables.iter().position(|&(_, a)| a >= 2) {
            let a = syllables.syllables[j].1;
            let mut zero = syllables.clone();
            zero.syllables.remove(j);
            let mut one = syllables.clone();
            one.syllables[j].1 = 1;
            let a_big = BigRational::from_integer(BigInt::from(a));
            let one_minus_a = BigRational::from_integer(BigInt::from(1 - a as i64));
            // D(..a..) = (1-a) s^a D(..0..) + a s^(a-1) D(..1..)
            let d0 = self.evaluate(&zero.to_word())?;
            let d1 = self.evaluate(&one.to_word())?;
            return Ok(&d0.shift(a as i32).scale(&one_minus_a) + &d1.shift(a as i32 - 1).scale(&a_big));
        }

        if is_literally_simple(w) {
            return Ok(mu_power(closure_components(w).count() - 1));
        }
        let found = find_square_conjugate_with(w, self.limits)?;
        let witness = found.ok_or_else(|| {
            BraidError::Internal(format!("{w} repeats a letter but has no conjugate with a square"))
        })?;
        self.evaluate(&witness.witness)
    }
}

pub fn d_polynomial(w: &BraidWord) -> Result<LaurentPolynomial> {
    DEvaluator::default().evaluate(w)
}

/// Whether the closure is a trivial link: no crossings between distinct
/// components, and every split piece on `m >= 2` strands is an unknot with
/// `m - 1` crossings.
pub fn is_geometrically_simple(w: &BraidWord) -> Result<bool> {
    is_geometrically_simple_with(w, &mut DEvaluator::default())
}

pub fn is_geometrically_simple_with(w: &BraidWord, eval: &mut DEvaluator) -> Result<bool> {
    if !is_split_diagram(w) {
        return Ok(false);
    }
    for (g, _) in split_support(w) {
        let m = g.strands();
        if m < 2 {
            continue;
        }
        // a piece with full support and no crossings between components is a knot
        if closure_components(&g).count() != 1 {
            return Ok(false);
        }
        if g.len() != m - 1 || eval.evaluate(&g)? != LaurentPolynomial::one() {
            return Ok(false);
        }
    }
    Ok(true)
}
