//! Laurent polynomials in `s` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{BraidError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    // no zero coefficients
    terms: BTreeMap<i32, BigRational>,
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn one() -> Self {
        LaurentPolynomial::monomial(BigRational::one(), 0)
    }

    pub fn monomial(coefficient: BigRational, exponent: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        LaurentPolynomial { terms }
    }

    /// `s^k`.
    pub fn s_pow(k: i32) -> Self {
        LaurentPolynomial::monomial(BigRational::one(), k)
    }

    /// `μ = (s + s⁻¹)/2`, the factor of a split union.
    pub fn mu() -> Self {
        LaurentPolynomial::from_terms([(1, rational(1, 2)), (-1, rational(1, 2))])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, BigRational)>) -> Self {
        let mut out = LaurentPolynomial::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exponent: i32, coefficient: BigRational) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigRational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: i32) -> BigRational {
        self.terms.get(&exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    /// Multiplication by `s^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, v)| (e + k, v.clone())).collect() }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return Err(BraidError::NegativeExponent(k));
        }
        let mut out = LaurentPolynomial::one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(out)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-other)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, other: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&other)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let power = match e {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{e}"),
            };
            if power.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&power)?;
            } else {
                write!(f, "{magnitude}*{power}")?;
            }
        }
        Ok(())
    }
}

/// `{"exponent": "p/q"}` in decreasing exponent order.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms.iter().rev() {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let mu = LaurentPolynomial::mu();
        let two_s = LaurentPolynomial::monomial(rational(2, 1), 1);
        assert_eq!(&mu * &two_s, LaurentPolynomial::from_terms([(2, rational(1, 1)), (0, rational(1, 1))]));
        assert_eq!(
            mu.pow(2).unwrap(),
            LaurentPolynomial::from_terms([(2, rational(1, 4)), (0, rational(1, 2)), (-2, rational(1, 4))])
        );
        assert!((&mu - &mu).is_zero());
        assert!((&mu + &(-&mu)).is_zero());
        assert_eq!(mu.pow(0).unwrap(), LaurentPolynomial::one());
        assert!(mu.pow(-1).is_err());
        assert_eq!(mu.scale(&rational(0, 1)), LaurentPolynomial::zero());
    }

    #[test]
    fn printing() {
        let p = LaurentPolynomial::from_terms([(3, rational(-1, 2)), (1, rational(3, 2))]);
        assert_eq!(p.to_string(), "-1/2*s^3 + 3/2*s");
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"3":"-1/2","1":"3/2"}"#);
        assert_eq!(LaurentPolynomial::one().to_string(), "1");
        assert_eq!(LaurentPolynomial::mu().to_string(), "1/2*s + 1/2*s^-1");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        let q = LaurentPolynomial::from_terms([(2, rational(1, 1)), (0, rational(-3, 1)), (-1, rational(-1, 1))]);
        assert_eq!(q.to_string(), "s^2 - 3 - s^-1");
    }
}
