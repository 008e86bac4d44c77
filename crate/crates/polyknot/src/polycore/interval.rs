//! Rational interval arithmetic used for certified sign evaluation.

use super::Polynomial;
use crate::rational::{rat_to_f64, Rat};
use num_traits::{Signed, Zero};

/// Closed interval with exact rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign if the interval excludes zero, else `None`.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, o: &RatInterval) -> RatInterval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        RatInterval::new(lo, hi)
    }

    pub fn mul_scalar(&self, c: &Rat) -> RatInterval {
        if c.is_negative() {
            RatInterval::new(&self.hi * c, &self.lo * c)
        } else {
            RatInterval::new(&self.lo * c, &self.hi * c)
        }
    }

    pub fn add_scalar(&self, c: &Rat) -> RatInterval {
        RatInterval::new(&self.lo + c, &self.hi + c)
    }

    pub fn square(&self) -> RatInterval {
        let m = self.mul(self);
        if self.contains_zero() {
            RatInterval::new(Rat::zero(), m.hi)
        } else {
            m
        }
    }

    /// Upper bound on |x| over the interval.
    pub fn abs_hi(&self) -> Rat {
        let a = self.lo.clone();
        let b = self.hi.clone();
        let na = if a.is_negative() { -a } else { a };
        let nb = if b.is_negative() { -b } else { b };
        if na > nb {
            na
        } else {
            nb
        }
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn mid_f64(&self) -> f64 {
        (rat_to_f64(&self.lo) + rat_to_f64(&self.hi)) / 2.0
    }

    pub fn intersects(&self, o: &RatInterval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    /// Horner evaluation of `p` over the interval.
    pub fn eval_poly(p: &Polynomial, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(Rat::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(x).add_scalar(c);
        }
        acc
    }
}



#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_i;

    #[test]
    fn interval_eval_contains_value() {
        let p = Polynomial::from_ints(&[-3, 0, 1]); // t^2 - 3
        let x = RatInterval::new(rat_i(1), rat_i(2));
        let img = RatInterval::eval_poly(&p, &x);
        for t in [1.0, 1.5, 2.0] {
            let v = t * t - 3.0;
            assert!(crate::rational::rat_to_f64(&img.lo) <= v + 1e-12);
            assert!(crate::rational::rat_to_f64(&img.hi) >= v - 1e-12);
        }
    }

    #[test]
    fn signs() {
        assert_eq!(RatInterval::new(rat_i(1), rat_i(2)).sign(), Some(1));
        assert_eq!(RatInterval::new(rat_i(-2), rat_i(-1)).sign(), Some(-1));
        assert_eq!(RatInterval::new(rat_i(-1), rat_i(1)).sign(), None);
        assert_eq!(RatInterval::point(rat_i(0)).sign(), Some(0));
    }
}
