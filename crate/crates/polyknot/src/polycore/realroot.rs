//! Real algebraic numbers as (square-free polynomial, isolating interval)
//! pairs, with exact sign evaluation and comparison.

use super::interval::RatInterval;
use super::{from_int, int_sign_at, to_int_primitive, Polynomial, SturmChain};
use crate::rational::{rat_i, rat_to_f64, Int, Rat};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::sync::Arc;

/// A real algebraic number: either an exact rational, or the unique root of a
/// square-free integer polynomial inside an open interval on which the
/// polynomial changes sign. Refinement bisects the interval in place.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    poly: Arc<Vec<Int>>,
    lo: Rat,
    hi: Rat,
}

impl RealAlgebraic {
    pub fn from_rational(x: Rat) -> Self {
        RealAlgebraic {
            poly: Arc::new(Vec::new()),
            lo: x.clone(),
            hi: x,
        }
    }

    /// Root isolated by a sign change of `poly` on `(lo, hi)`; neither
    /// endpoint may be a root.
    pub(crate) fn from_sign_change(poly: Arc<Vec<Int>>, lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo < hi);
        debug_assert_eq!(
            int_sign_at(&poly, &lo) * int_sign_at(&poly, &hi),
            -1,
            "isolating interval must change sign"
        );
        RealAlgebraic { poly, lo, hi }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn interval(&self) -> RatInterval {
        RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn is_rational(&self) -> Option<&Rat> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    /// The defining polynomial as a rational polynomial (`t - x` for exact
    /// rationals).
    pub fn defining_poly(&self) -> Polynomial {
        if let Some(x) = self.is_rational() {
            &Polynomial::x() - &Polynomial::constant(x.clone())
        } else {
            from_int(&self.poly)
        }
    }

    pub fn approx_f64(&self) -> f64 {
        if self.lo == self.hi {
            rat_to_f64(&self.lo)
        } else {
            self.interval().mid_f64()
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// One bisection step.
    pub fn refine(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / rat_i(2);
        let sm = int_sign_at(&self.poly, &mid);
        if sm == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        if sm == int_sign_at(&self.poly, &self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to_width(&mut self, w: &Rat) {
        while self.lo != self.hi && self.width() > *w {
            self.refine();
        }
    }

    pub fn overlaps(&self, other: &RealAlgebraic) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Exact sign of `q` at this number.
    pub fn sign_of(&mut self, q: &Polynomial) -> i8 {
        if q.is_zero() {
            return 0;
        }
        if let Some(x) = self.is_rational() {
            let v = q.eval(x);
            return if v.is_zero() {
                0
            } else if v.is_negative() {
                -1
            } else {
                1
            };
        }
        // Zero test first: q vanishes here iff this number is a root of
        // gcd(p, q), which has at most one root in the isolating interval.
        let p = self.defining_poly();
        let g = p.gcd(q);
        if g.degree().map_or(false, |d| d >= 1) {
            let gi = to_int_primitive(&g);
            let sl = int_sign_at(&gi, &self.lo);
            let sh = int_sign_at(&gi, &self.hi);
            debug_assert!(sl != 0 && sh != 0, "interval endpoints are roots");
            if sl != sh {
                return 0;
            }
        }
        loop {
            let img = RatInterval::eval_poly(q, &self.interval());
            if let Some(s) = img.sign() {
                if s != 0 {
                    return s;
                }
            }
            self.refine();
        }
    }

    /// Exact equality decision.
    pub fn eq_decide(&mut self, other: &mut RealAlgebraic) -> bool {
        if !self.overlaps(other) {
            return false;
        }
        match (self.is_rational().cloned(), other.is_rational().cloned()) {
            (Some(a), Some(b)) => return a == b,
            (Some(a), None) => return other.sign_of(&point_poly(&a)) == 0,
            (None, Some(b)) => return self.sign_of(&point_poly(&b)) == 0,
            (None, None) => {}
        }
        let g = self.defining_poly().gcd(&other.defining_poly());
        if g.degree().map_or(true, |d| d == 0) {
            // No common root at all: refine until the intervals separate.
            while self.overlaps(other) {
                self.refine();
                other.refine();
            }
            return false;
        }
        let gi = to_int_primitive(&g);
        let self_on_g = int_sign_at(&gi, &self.lo) != int_sign_at(&gi, &self.hi);
        let other_on_g = int_sign_at(&gi, &other.lo) != int_sign_at(&gi, &other.hi);
        if !self_on_g || !other_on_g {
            while self.overlaps(other) {
                self.refine();
                other.refine();
            }
            return false;
        }
        // Both are roots of the square-free g; equal iff g has a root in the
        // intersection of the two isolating intervals.
        let lo = if self.lo > other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi < other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo >= hi {
            // Touching endpoints only; endpoints are never roots.
            return false;
        }
        let chain = SturmChain::new(&g);
        chain.count_roots(&lo, &hi) >= 1
    }

    /// Total order; decides ties exactly.
    pub fn cmp_refine(&mut self, other: &mut RealAlgebraic) -> Ordering {
        if self.eq_decide(other) {
            return Ordering::Equal;
        }
        loop {
            if self.hi < other.lo {
                return Ordering::Less;
            }
            if other.hi < self.lo {
                return Ordering::Greater;
            }
            self.refine();
            other.refine();
        }
    }
}

fn point_poly(x: &Rat) -> Polynomial {
    &Polynomial::x() - &Polynomial::constant(x.clone())
}

/// Sorts values ascending, deciding every comparison exactly.
pub fn sort_exact(values: &mut Vec<RealAlgebraic>) {
    let n = values.len();
    for i in 1..n {
        let mut j = i;
        while j > 0 {
            let (left, right) = values.split_at_mut(j);
            if left[j - 1].cmp_refine(&mut right[0]) == Ordering::Greater {
                values.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_pq;

    fn sqrt_of(n: i64) -> RealAlgebraic {
        let p = Polynomial::from_ints(&[-n, 0, 1]);
        let mut roots = super::super::isolate_squarefree(&p);
        roots.retain(|r| r.approx_f64() > 0.0);
        roots.pop().unwrap()
    }

    #[test]
    fn sign_of_detects_exact_zero() {
        let mut s2 = sqrt_of(2);
        // t^2 - 2 vanishes, t^2 - 3 does not.
        assert_eq!(s2.sign_of(&Polynomial::from_ints(&[-2, 0, 1])), 0);
        assert_eq!(s2.sign_of(&Polynomial::from_ints(&[-3, 0, 1])), -1);
        assert_eq!(s2.sign_of(&Polynomial::from_ints(&[0, 1])), 1);
    }

    #[test]
    fn equality_and_order() {
        let mut a = sqrt_of(2);
        let mut b = sqrt_of(2);
        assert!(a.eq_decide(&mut b));
        let mut c = sqrt_of(3);
        assert!(!a.eq_decide(&mut c));
        assert_eq!(a.cmp_refine(&mut c), Ordering::Less);
        // sqrt2 vs a rational just below it
        let mut r = RealAlgebraic::from_rational(rat_pq(141421, 100000));
        assert_eq!(a.cmp_refine(&mut r), Ordering::Greater);
    }

    #[test]
    fn refinement_tightens() {
        let mut a = sqrt_of(2);
        a.refine_to_width(&rat_pq(1, 1 << 30));
        assert!((a.approx_f64() - 2f64.sqrt()).abs() < 1e-9);
        assert!(a.width() <= rat_pq(1, 1 << 30));
    }
}
