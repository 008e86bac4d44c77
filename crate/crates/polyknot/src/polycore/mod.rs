//! Exact univariate polynomial algebra over the rationals: arithmetic, gcd,
//! square-free decomposition, Sturm sequences, Cauchy root bounds, and real
//! root isolation with refinable isolating intervals.
//!
//! Everything here is immutable after construction and pure, so batch callers
//! may share values freely across threads.

pub mod interval;
pub mod realroot;
pub mod ring;

use crate::rational::{rat_i, rat_to_f64, rat_to_string, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

pub use interval::RatInterval;
pub use realroot::RealAlgebraic;
pub use ring::{resultant, resultant_ring, resultant_univariate, BiPoly, Ring, RingPoly};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`; the top coefficient is nonzero
/// unless the polynomial is zero, in which case the list is empty.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("indeterminate roots: zero polynomial")]
    IndeterminateRoots,
    #[error("constant polynomial has no root bound")]
    ConstantRootBound,
    #[error("division by zero polynomial")]
    DivisionByZero,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rat::one())
    }

    pub fn x() -> Self {
        Polynomial::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(k: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// Builds from ascending-power coefficients, trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Integer coefficients, ascending powers: `[a0, a1, ..]`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    /// `∏ (t - r_i)` for rational roots `r_i`.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut p = Polynomial::one();
        for r in roots {
            p = &p * &Polynomial::from_coeffs(vec![-r.clone(), Rat::one()]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree treating the zero polynomial as degree 0.
    pub fn deg_or_0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn leading(&self) -> &Rat {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(0)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_i(i as i64 + 1))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / rat_i(i as i64 + 1)),
        );
        Polynomial::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn divmod(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (Polynomial::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut q = vec![Rat::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let v = &rem[k + j] - &(dc * &c);
                    rem[k + j] = v;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Polynomial::from_coeffs(q), Polynomial::from_coeffs(rem))
    }

    /// Exact quotient; panics if the remainder is nonzero.
    pub fn exact_div(&self, d: &Polynomial) -> Polynomial {
        let (q, r) = self.divmod(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd over the rationals (gcd with zero is the other argument).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        // Primitive PRS over the integers keeps coefficient growth in check.
        let mut a = to_int_primitive(self);
        let mut b = to_int_primitive(other);
        if int_deg(&a) < int_deg(&b) {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_pseudo_rem(&a, &b);
            a = b;
            b = int_primitive(r);
        }
        from_int(&a).monic()
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let inv = Rat::one() / self.leading();
        self.scale(&inv)
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.is_zero() || self.degree() == Some(0) {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Yun decomposition: returns `(f_k, k)` with `p = lc · ∏ f_k^k`,
    /// the `f_k` monic, square-free and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, usize)> {
        assert!(!self.is_zero());
        let p = self.monic();
        if p.degree() == Some(0) {
            return Vec::new();
        }
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        if a0.degree() == Some(0) {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let mut b = p.exact_div(&a0);
        let mut c = dp.exact_div(&a0);
        let mut k = 1usize;
        loop {
            let d = &c - &b.derivative();
            if d.is_zero() {
                if b.degree() != Some(0) {
                    out.push((b.monic(), k));
                }
                break;
            }
            let f = b.gcd(&d);
            if f.degree() != Some(0) {
                out.push((f.clone(), k));
            }
            b = b.exact_div(&f);
            c = d.exact_div(&f);
            k += 1;
        }
        out
    }

    /// Cauchy bound: every real root has absolute value at most
    /// `1 + max_i |a_i| / |a_d|`.
    pub fn root_bound(&self) -> Result<Rat, PolyError> {
        let d = self.degree().ok_or(PolyError::ConstantRootBound)?;
        if d == 0 {
            return Err(PolyError::ConstantRootBound);
        }
        let lead = self.leading().abs();
        let mut max = Rat::zero();
        for c in &self.coeffs[..d] {
            let q = c.abs() / &lead;
            if q > max {
                max = q;
            }
        }
        Ok(Rat::one() + max)
    }

    /// Formats with the given variable name, e.g. `t^5 - 10*t`.
    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("t"))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", rat_to_string(&mag))?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.var)?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &out[i + j] + &(a * b);
                out[i + j] = v;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

// ---- integer-primitive scaffolding shared with realroot ----

pub(crate) fn int_deg(c: &[Int]) -> isize {
    c.len() as isize - 1
}

/// Scales to integer coefficients with content 1, preserving sign.
pub(crate) fn to_int_primitive(p: &Polynomial) -> Vec<Int> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut denom_lcm = Int::one();
    for c in p.coeffs() {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<Int> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    int_primitive(ints)
}

pub(crate) fn int_primitive(mut c: Vec<Int>) -> Vec<Int> {
    while c.last().map_or(false, |x| x.is_zero()) {
        c.pop();
    }
    if c.is_empty() {
        return c;
    }
    let mut g = Int::zero();
    for x in &c {
        g = num_integer::gcd(g, x.clone());
        if g.is_one() {
            return c;
        }
    }
    for x in &mut c {
        *x = &*x / &g;
    }
    c
}

pub(crate) fn from_int(c: &[Int]) -> Polynomial {
    Polynomial::from_coeffs(c.iter().map(|x| Rat::from_integer(x.clone())).collect())
}

/// Pseudo-remainder of `a` by `b`, scaled so the result equals
/// `(a mod b)` times a positive constant.
pub(crate) fn int_pseudo_rem(a: &[Int], b: &[Int]) -> Vec<Int> {
    let db = int_deg(b);
    assert!(db >= 0);
    let lead = b.last().unwrap().clone();
    let mut r: Vec<Int> = a.to_vec();
    let mut flips = 0usize;
    while int_deg(&r) >= db {
        let dr = int_deg(&r) as usize;
        let c = r.last().unwrap().clone();
        // r := lead * r - c * t^(dr-db) * b
        for x in r.iter_mut() {
            *x = &*x * &lead;
        }
        let off = dr - db as usize;
        for (j, bc) in b.iter().enumerate() {
            let v = &r[off + j] - &(bc * &c);
            r[off + j] = v;
        }
        while r.last().map_or(false, |x| x.is_zero()) {
            r.pop();
        }
        if lead.is_negative() {
            flips += 1;
        }
        if r.is_empty() {
            break;
        }
    }
    if flips % 2 == 1 {
        for x in r.iter_mut() {
            *x = -&*x;
        }
    }
    r
}

/// Sign of an integer polynomial at a rational point, without building
/// rationals: evaluates the homogenized form `Σ c_k a^k b^(n-k)`.
pub(crate) fn int_sign_at(c: &[Int], x: &Rat) -> i8 {
    if c.is_empty() {
        return 0;
    }
    let a = x.numer();
    let b = x.denom();
    let n = c.len() - 1;
    let mut apow = Int::one();
    let mut bpows = Vec::with_capacity(n + 1);
    let mut bp = Int::one();
    for _ in 0..=n {
        bpows.push(bp.clone());
        bp *= b;
    }
    let mut acc = Int::zero();
    for (k, ck) in c.iter().enumerate() {
        acc += ck * &apow * &bpows[n - k];
        apow *= a;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

// ---- Sturm sequences ----

/// Sturm chain of `p` as primitive integer polynomials, content-stripped at
/// every step.
pub struct SturmChain {
    chain: Vec<Vec<Int>>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> SturmChain {
        let p0 = to_int_primitive(p);
        let p1 = to_int_primitive(&p.derivative());
        let mut chain = vec![p0];
        if !p1.is_empty() {
            chain.push(p1);
            loop {
                let k = chain.len();
                let r = int_pseudo_rem(&chain[k - 2], &chain[k - 1]);
                if r.is_empty() {
                    break;
                }
                let mut r = int_primitive(r);
                for x in r.iter_mut() {
                    *x = -&*x;
                }
                chain.push(r);
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = int_sign_at(p, x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`; requires `a < b` and that
    /// neither endpoint is a root of `p`.
    pub fn count_roots(&self, a: &Rat, b: &Rat) -> usize {
        debug_assert!(a < b);
        debug_assert!(int_sign_at(&self.chain[0], a) != 0);
        debug_assert!(int_sign_at(&self.chain[0], b) != 0);
        self.variations_at(a) - self.variations_at(b)
    }
}

// ---- real root isolation ----

/// Ordered list of the distinct real roots of a polynomial.
#[derive(Clone, Debug)]
pub struct RootList {
    pub roots: Vec<RootEntry>,
}

#[derive(Clone, Debug)]
pub struct RootEntry {
    pub value: RealAlgebraic,
    pub multiplicity: usize,
}

impl RootList {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn approx(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.value.approx_f64()).collect()
    }
}

/// All distinct real roots of `p` with multiplicities, each isolated in an
/// interval of width at most `refine_width`.
pub fn real_roots(p: &Polynomial, refine_width: &Rat) -> Result<RootList, PolyError> {
    if p.is_zero() {
        return Err(PolyError::IndeterminateRoots);
    }
    let mut entries: Vec<RootEntry> = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        for value in isolate_squarefree(&factor) {
            entries.push(RootEntry {
                value,
                multiplicity: mult,
            });
        }
    }
    for e in entries.iter_mut() {
        e.value.refine_to_width(refine_width);
    }
    // Roots of distinct Yun factors are distinct reals, so refinement
    // separates every pair.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                let (a, b) = {
                    let (l, r) = entries.split_at_mut(j);
                    (&mut l[i].value, &mut r[0].value)
                };
                while a.overlaps(b) {
                    a.refine();
                    b.refine();
                    changed = true;
                }
            }
        }
    }
    entries.sort_by(|a, b| a.value.lo().partial_cmp(b.value.lo()).unwrap());
    Ok(RootList { roots: entries })
}

/// Isolating intervals for all real roots of a square-free polynomial.
pub(crate) fn isolate_squarefree(f: &Polynomial) -> Vec<RealAlgebraic> {
    let mut out = Vec::new();
    let mut work = f.monic();
    loop {
        if work.degree().map_or(true, |d| d == 0) {
            return out;
        }
        if work.degree() == Some(1) {
            let root = -(&work.coeff(0) / &work.coeff(1));
            out.push(RealAlgebraic::from_rational(root));
            return out;
        }
        let bound = work.root_bound().expect("nonconstant");
        let b = bound + Rat::one();
        let a = -b.clone();
        let chain = SturmChain::new(&work);
        let ints = to_int_primitive(&work);
        debug_assert!(int_sign_at(&ints, &a) != 0 && int_sign_at(&ints, &b) != 0);
        let mut stack = vec![(a, b)];
        let mut rational_root: Option<Rat> = None;
        'bisect: while let Some((lo, hi)) = stack.pop() {
            let n = chain.count_roots(&lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(RealAlgebraic::from_sign_change(
                    Arc::new(ints.clone()),
                    lo,
                    hi,
                ));
                continue;
            }
            let mid = (&lo + &hi) / rat_i(2);
            if int_sign_at(&ints, &mid) == 0 {
                rational_root = Some(mid);
                break 'bisect;
            }
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        match rational_root {
            None => return out,
            Some(r) => {
                // Exact rational root: record it, deflate, and restart
                // isolation on the quotient.
                out.push(RealAlgebraic::from_rational(r.clone()));
                let lin = Polynomial::from_coeffs(vec![-r, Rat::one()]);
                work = work.exact_div(&lin);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_pq;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let f = p(&[-3, 0, 1]); // t^2 - 3
        let g = p(&[1, 1]); // t + 1
        assert_eq!(&f + &g, p(&[-2, 1, 1]));
        assert_eq!(&f * &g, p(&[-3, -3, 1, 1]));
        assert_eq!(f.derivative(), p(&[0, 2]));
        assert_eq!(f.eval(&rat_i(2)), rat_i(1));
        let (q, r) = f.divmod(&g);
        assert_eq!(&(&q * &g) + &r, f);
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]); // (t-1)^2 (t+2)
        let g = &p(&[-1, 1]) * &p(&[5, 1]);
        assert_eq!(f.gcd(&g), p(&[-1, 1]).monic());
        assert_eq!(f.squarefree_part(), (&p(&[-1, 1]) * &p(&[2, 1])).monic());
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (p(&[2, 1]), 1));
        assert_eq!(dec[1], (p(&[-1, 1]), 2));
    }

    #[test]
    fn root_bounds_match_examples() {
        assert_eq!(p(&[0, -3, 0, 1]).root_bound().unwrap(), rat_i(4));
        assert_eq!(p(&[0, -10, 0, 0, 0, 1]).root_bound().unwrap(), rat_i(11));
        assert_eq!(p(&[0, 0, 1]).root_bound().unwrap(), rat_i(1));
        assert_eq!(
            Polynomial::constant(rat_i(3)).root_bound(),
            Err(PolyError::ConstantRootBound)
        );
    }

    #[test]
    fn isolates_simple_roots() {
        let width = rat_pq(1, 1 << 20);
        let roots = real_roots(&p(&[-2, 0, 1]), &width).unwrap();
        assert_eq!(roots.len(), 2);
        let a = roots.approx();
        assert!((a[0] + 1.41421356).abs() < 1e-5);
        assert!((a[1] - 1.41421356).abs() < 1e-5);
        assert!(roots.roots.iter().all(|r| r.multiplicity == 1));

        let none = real_roots(&p(&[1, 0, 1]), &width).unwrap();
        assert!(none.is_empty());

        // 5t^4 - 10: roots ±2^(1/4)
        let quartic = real_roots(&p(&[-10, 0, 0, 0, 5]), &width).unwrap();
        let a = quartic.approx();
        assert_eq!(a.len(), 2);
        assert!((a[1] - 1.18920712).abs() < 1e-5);

        assert_eq!(
            real_roots(&Polynomial::zero(), &width).err(),
            Some(PolyError::IndeterminateRoots)
        );
    }

    #[test]
    fn multiplicities_and_rational_roots() {
        let width = rat_pq(1, 1024);
        // t^2 (t-1)^3 (t^2-2)
        let f = &(&p(&[0, 1]).pow(2) * &p(&[-1, 1]).pow(3)) * &p(&[-2, 0, 1]);
        let roots = real_roots(&f, &width).unwrap();
        let mults: Vec<usize> = roots.roots.iter().map(|r| r.multiplicity).collect();
        assert_eq!(roots.len(), 4);
        assert_eq!(mults, vec![1, 2, 3, 1]);
        assert!(roots.roots[1].value.is_rational().is_some());
        assert_eq!(roots.roots[1].value.approx_f64(), 0.0);
        assert_eq!(roots.roots[2].value.approx_f64(), 1.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        // Count reported by real_roots equals the Sturm count over the
        // whole Cauchy-bounded interval.
        #[test]
        fn root_count_matches_sturm(coeffs in proptest::collection::vec(-9i64..=9, 2..=9)) {
            let f = Polynomial::from_ints(&coeffs);
            prop_assume!(f.degree().map_or(false, |d| d >= 1));
            let width = rat_pq(1, 64);
            let roots = real_roots(&f, &width).unwrap();
            let sf = f.squarefree_part();
            let chain = SturmChain::new(&sf);
            let b = sf.root_bound().unwrap() + rat_i(1);
            let distinct = chain.count_roots(&-b.clone(), &b);
            prop_assert_eq!(roots.len(), distinct);
        }

        // Odd-multiplicity roots show a sign change across the isolating
        // interval; gcd-deflation reduces every multiplicity to one.
        #[test]
        fn interval_signs_and_deflation(coeffs in proptest::collection::vec(-6i64..=6, 2..=7),
                                        square in any::<bool>()) {
            let base = Polynomial::from_ints(&coeffs);
            prop_assume!(base.degree().map_or(false, |d| d >= 1));
            let f = if square { &base * &base } else { base.clone() };
            let width = rat_pq(1, 4096);
            let roots = real_roots(&f, &width).unwrap();
            let deflated = f.squarefree_part();
            let defl_roots = real_roots(&deflated, &width).unwrap();
            prop_assert!(defl_roots.roots.iter().all(|r| r.multiplicity == 1));
            prop_assert_eq!(defl_roots.len(), roots.len());
            for r in &roots.roots {
                if r.multiplicity % 2 == 1 && r.value.is_rational().is_none() {
                    let (lo, hi) = (r.value.lo().clone(), r.value.hi().clone());
                    let sl = f.eval(&lo);
                    let sh = f.eval(&hi);
                    prop_assert!(sl.is_negative() != sh.is_negative());
                }
            }
        }
    }
}
