//! Integer Laurent polynomials in one variable, the value type for
//! diagram invariants.

use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial with `i64` coefficients and integer exponents,
/// canonically trimmed (no zero coefficients stored).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn one() -> Self {
        LaurentPolynomial::from_terms([(0, 1)])
    }

    /// `c * x^e`.
    pub fn monomial(e: i64, c: i64) -> Self {
        LaurentPolynomial::from_terms([(e, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut out = LaurentPolynomial::default();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.terms.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, o: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in o.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn mul(&self, o: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::default();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms().map(|(e, a)| (e, a * c)))
    }

    pub fn shift(&self, k: i64) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms().map(|(e, a)| (e + k, a)))
    }

    pub fn pow(&self, e: u32) -> LaurentPolynomial {
        let mut acc = LaurentPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exponent reversal `x ↦ x⁻¹` (the mirror operation on invariants).
    pub fn reversed(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.reversed()
    }

    pub fn display<'a>(&'a self, var: &'a str) -> LaurentDisplay<'a> {
        LaurentDisplay { poly: self, var }
    }
}

pub struct LaurentDisplay<'a> {
    poly: &'a LaurentPolynomial,
    var: &'a str,
}

impl fmt::Display for LaurentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.poly.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != 1 || e == 0 {
                write!(f, "{mag}")?;
            }
            if e != 0 {
                if mag != 1 {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.var)?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_reversal() {
        let p = LaurentPolynomial::from_terms([(-1, 1), (0, -1), (1, 1)]);
        assert!(p.is_palindromic());
        let q = LaurentPolynomial::from_terms([(1, 1), (3, 1), (4, -1)]);
        assert_eq!(
            q.reversed(),
            LaurentPolynomial::from_terms([(-1, 1), (-3, 1), (-4, -1)])
        );
        assert!(!q.is_palindromic());
        let prod = p.mul(&LaurentPolynomial::monomial(2, 3));
        assert_eq!(prod, LaurentPolynomial::from_terms([(1, 3), (2, -3), (3, 3)]));
        assert_eq!(p.add(&p.scale(-1)), LaurentPolynomial::zero());
        assert_eq!(format!("{}", q.display("t")), "-t^4 + t^3 + t");
    }
}
