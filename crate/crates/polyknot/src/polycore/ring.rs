//! Resultants via Sylvester determinants, over the rationals and over
//! generic coefficient rings.
//!
//! Convention, fixed once for all sign-sensitive callers: the resultant of
//! `f` and `g` eliminating `u` is the determinant of the standard Sylvester
//! matrix with the `deg g` rows of `f`-coefficients first, each row listing
//! coefficients in descending powers of `u`.

use super::Polynomial;
use crate::rational::{rat_i, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Commutative ring with exact division, enough for fraction-free
/// elimination.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Exact quotient; panics when the division is not exact.
    fn exact_div(&self, o: &Self) -> Self;
}

impl Ring for Rat {
    fn ring_zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn ring_one() -> Self {
        <Rat as One>::one()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        assert!(!Zero::is_zero(o), "division by zero");
        self / o
    }
}

/// Dense polynomial over an arbitrary ring; `coeffs[k]` multiplies `u^k`.
#[derive(Clone, PartialEq, Debug)]
pub struct RingPoly<R: Ring> {
    pub coeffs: Vec<R>,
}

impl<R: Ring> RingPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.ring_is_zero()) {
            coeffs.pop();
        }
        RingPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        RingPoly::new(vec![c])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::ring_zero)
    }
}

impl<R: Ring> Ring for RingPoly<R> {
    fn ring_zero() -> Self {
        RingPoly { coeffs: Vec::new() }
    }
    fn ring_one() -> Self {
        RingPoly::constant(R::ring_one())
    }
    fn ring_is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        RingPoly::new((0..n).map(|k| self.coeff(k).add_ref(&o.coeff(k))).collect())
    }
    fn sub_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        RingPoly::new((0..n).map(|k| self.coeff(k).sub_ref(&o.coeff(k))).collect())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.ring_is_zero() || o.ring_is_zero() {
            return Self::ring_zero();
        }
        let mut out = vec![R::ring_zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.ring_is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        RingPoly::new(out)
    }
    fn neg_ref(&self) -> Self {
        RingPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }
    fn exact_div(&self, o: &Self) -> Self {
        assert!(!o.ring_is_zero(), "division by zero polynomial");
        if self.ring_is_zero() {
            return Self::ring_zero();
        }
        let dd = o.degree().unwrap();
        let lead = o.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        assert!(rem.len() >= o.coeffs.len(), "inexact division: degree too low");
        let qlen = rem.len() - dd;
        let mut q = vec![R::ring_zero(); qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + dd].exact_div(lead);
            if !c.ring_is_zero() {
                for (j, dc) in o.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub_ref(&dc.mul_ref(&c));
                }
            }
            q[k] = c;
        }
        assert!(
            rem[..dd].iter().all(|c| c.ring_is_zero()),
            "inexact polynomial division"
        );
        RingPoly::new(q)
    }
}

/// Fraction-free Bareiss determinant with row pivoting.
pub fn det_bareiss<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::ring_one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign_flip = false;
    let mut prev = R::ring_one();
    for k in 0..n {
        if m[k][k].ring_is_zero() {
            let pivot = (k + 1..n).find(|&r| !m[r][k].ring_is_zero());
            match pivot {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return R::ring_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul_ref(&m[i][j]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = R::ring_zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg_ref()
    } else {
        det
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ResultantError {
    #[error("resultant of a zero polynomial")]
    ZeroPolynomial,
    #[error("both arguments constant in the eliminated variable")]
    BothConstant,
}

fn pow_ring<R: Ring>(base: &R, e: usize) -> R {
    let mut acc = R::ring_one();
    for _ in 0..e {
        acc = acc.mul_ref(base);
    }
    acc
}

/// Resultant over any exact-division ring, eliminating the variable of the
/// `RingPoly` layer. Coefficient slices are ascending in the eliminated
/// variable.
pub fn resultant_ring<R: Ring>(f: &RingPoly<R>, g: &RingPoly<R>) -> Result<R, ResultantError> {
    let m = f.degree().ok_or(ResultantError::ZeroPolynomial)?;
    let n = g.degree().ok_or(ResultantError::ZeroPolynomial)?;
    if m == 0 && n == 0 {
        return Err(ResultantError::BothConstant);
    }
    if m == 0 {
        return Ok(pow_ring(&f.coeffs[0], n));
    }
    if n == 0 {
        return Ok(pow_ring(&g.coeffs[0], m));
    }
    let size = m + n;
    let mut mat = vec![vec![R::ring_zero(); size]; size];
    for row in 0..n {
        for (k, c) in f.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    Ok(det_bareiss(mat))
}

/// Bivariate polynomial: `coeffs[k]` is the polynomial (in the kept
/// variable) multiplying `u^k`, `u` being the variable to eliminate.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly {
    pub coeffs: Vec<Polynomial>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<Polynomial>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the eliminated (outer) variable.
    pub fn deg_outer(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_inner_max(&self) -> usize {
        self.coeffs.iter().map(|c| c.deg_or_0()).max().unwrap_or(0)
    }

    /// Substitutes a rational for the inner variable, leaving a univariate
    /// polynomial in the outer variable.
    pub fn eval_inner(&self, v: &Rat) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c.eval(v)).collect())
    }

    /// Swaps the two variables.
    pub fn transpose(&self) -> BiPoly {
        let inner = self.deg_inner_max();
        let mut cols = vec![vec![Rat::zero(); self.coeffs.len()]; inner + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            for (j, a) in c.coeffs().iter().enumerate() {
                cols[j][k] = a.clone();
            }
        }
        BiPoly::new(cols.into_iter().map(Polynomial::from_coeffs).collect())
    }

    pub fn to_ring_poly(&self) -> RingPoly<RingPoly<Rat>> {
        RingPoly::new(
            self.coeffs
                .iter()
                .map(|c| RingPoly::new(c.coeffs().to_vec()))
                .collect(),
        )
    }
}

/// Resultant of two bivariate polynomials, eliminating the outer variable.
///
/// Computed by evaluation at integer points and Newton interpolation, with
/// each point's Sylvester determinant done fraction-free over the integers.
pub fn resultant(f: &BiPoly, g: &BiPoly) -> Result<Polynomial, ResultantError> {
    let m = f.deg_outer().ok_or(ResultantError::ZeroPolynomial)?;
    let n = g.deg_outer().ok_or(ResultantError::ZeroPolynomial)?;
    if m == 0 && n == 0 {
        return Err(ResultantError::BothConstant);
    }
    if m == 0 {
        return Ok(f.coeffs[0].pow(n));
    }
    if n == 0 {
        return Ok(g.coeffs[0].pow(m));
    }
    let bound = n * f.deg_inner_max() + m * g.deg_inner_max();
    let mut xs: Vec<Rat> = Vec::with_capacity(bound + 1);
    let mut ys: Vec<Rat> = Vec::with_capacity(bound + 1);
    let mut point = 0i64;
    while xs.len() <= bound {
        let v = rat_i(point);
        let fv = f.eval_inner(&v);
        let gv = g.eval_inner(&v);
        ys.push(resultant_at_point(&fv, &gv, m, n));
        xs.push(v);
        point = if point > 0 { -point } else { -point + 1 };
    }
    Ok(newton_interpolate(&xs, &ys))
}

/// Determinant of the Sylvester matrix of fixed shape `(m, n)` with the
/// given (possibly degree-dropped) evaluated coefficients.
fn resultant_at_point(f: &Polynomial, g: &Polynomial, m: usize, n: usize) -> Rat {
    let size = m + n;
    let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::zero(); size]; size];
    for row in 0..n {
        for k in 0..=m {
            rows[row][row + k] = f.coeff(m - k);
        }
    }
    for row in 0..m {
        for k in 0..=n {
            rows[n + row][row + k] = g.coeff(n - k);
        }
    }
    // Clear denominators row by row, track the scale, then integer Bareiss.
    let mut scale = Rat::one();
    let mut imat: Vec<Vec<Int>> = Vec::with_capacity(size);
    for row in &rows {
        let mut lcm = Int::one();
        for c in row {
            lcm = lcm.lcm(c.denom());
        }
        scale = scale * Rat::from_integer(lcm.clone());
        imat.push(row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect());
    }
    let det = int_det_bareiss(imat);
    Rat::from_integer(det) / scale
}

fn int_det_bareiss(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n {
        if Zero::is_zero(&m[k][k]) {
            match (k + 1..n).find(|&r| !Zero::is_zero(&m[r][k])) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

pub(crate) fn newton_interpolate(xs: &[Rat], ys: &[Rat]) -> Polynomial {
    // Divided differences, then expansion of the Newton form.
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    let mut acc = Polynomial::zero();
    for i in (0..n).rev() {
        let lin = Polynomial::from_coeffs(vec![-xs[i].clone(), Rat::one()]);
        acc = &(&acc * &lin) + &Polynomial::constant(dd[i].clone());
    }
    acc
}

/// Resultant of two univariate polynomials.
pub fn resultant_univariate(f: &Polynomial, g: &Polynomial) -> Result<Rat, ResultantError> {
    let fr = RingPoly::new(f.coeffs().to_vec());
    let gr = RingPoly::new(g.coeffs().to_vec());
    resultant_ring(&fr, &gr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_i;
    use proptest::prelude::*;

    fn bp(rows: &[&[i64]]) -> BiPoly {
        // rows[k] = coefficients (ascending in kept var) of u^k
        BiPoly::new(rows.iter().map(|r| Polynomial::from_ints(r)).collect())
    }

    #[test]
    fn univariate_examples() {
        // Res_t(t^2 - 1, t - 1) = 0 (shared root)
        let f = Polynomial::from_ints(&[-1, 0, 1]);
        let g = Polynomial::from_ints(&[-1, 1]);
        assert_eq!(resultant_univariate(&f, &g).unwrap(), rat_i(0));
        // Res_t(t^2 + 1, t) = 1
        let f = Polynomial::from_ints(&[1, 0, 1]);
        let g = Polynomial::from_ints(&[0, 1]);
        assert_eq!(resultant_univariate(&f, &g).unwrap(), rat_i(1));
        assert_eq!(
            resultant_univariate(&Polynomial::one(), &Polynomial::one()),
            Err(ResultantError::BothConstant)
        );
        assert_eq!(
            resultant_univariate(&Polynomial::zero(), &g),
            Err(ResultantError::ZeroPolynomial)
        );
    }

    #[test]
    fn linear_difference_example() {
        // Res_t(t - a, t - b) = a - b, computed over the nested ring Q[a][b].
        type Qa = RingPoly<Rat>; // polynomials in a
        type Qab = RingPoly<Qa>; // polynomials in b with Q[a] coefficients
        let a: Qab = RingPoly::constant(RingPoly::new(vec![rat_i(0), rat_i(1)]));
        let b: Qab = RingPoly::new(vec![Qa::ring_zero(), Qa::ring_one()]);
        let one = Qab::ring_one();
        // f = t - a, g = t - b as polynomials in t over Q[a][b]
        let f: RingPoly<Qab> = RingPoly::new(vec![a.neg_ref(), one.clone()]);
        let g: RingPoly<Qab> = RingPoly::new(vec![b.neg_ref(), one]);
        let res = resultant_ring(&f, &g).unwrap();
        let expected = a.sub_ref(&b);
        assert_eq!(res, expected);
    }

    #[test]
    fn bivariate_matches_generic() {
        // f = u^2 - v, g = u - v^2; Res_u = v^4 - v (common zeros at v^3 = 1)
        let f = bp(&[&[0, -1], &[], &[1]]);
        let g = bp(&[&[0, 0, -1], &[1]]);
        let r = resultant(&f, &g).unwrap();
        assert_eq!(r, Polynomial::from_ints(&[0, -1, 0, 0, 1]));
        let rg = resultant_ring(&f.to_ring_poly(), &g.to_ring_poly()).unwrap();
        assert_eq!(Polynomial::from_coeffs(rg.coeffs), r);
    }

    #[test]
    fn transpose_swaps_variables() {
        let f = bp(&[&[1, 2], &[3]]); // (1 + 2v) + 3u
        let t = f.transpose(); // (1 + 3v') + 2u' with roles swapped
        assert_eq!(t.coeffs.len(), 2);
        assert_eq!(t.coeffs[0], Polynomial::from_ints(&[1, 3]));
        assert_eq!(t.coeffs[1], Polynomial::from_ints(&[2]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        // Res(f, g) = 0 exactly when f and g share a nonconstant gcd.
        #[test]
        fn resultant_vanishes_iff_common_factor(
            fc in proptest::collection::vec(-5i64..=5, 2..=7),
            gc in proptest::collection::vec(-5i64..=5, 2..=7),
            share in any::<bool>(),
        ) {
            let mut f = Polynomial::from_ints(&fc);
            let mut g = Polynomial::from_ints(&gc);
            prop_assume!(f.degree().map_or(false, |d| d >= 1));
            prop_assume!(g.degree().map_or(false, |d| d >= 1));
            if share {
                let common = Polynomial::from_ints(&[1, 1]);
                f = &f * &common;
                g = &g * &common;
            }
            let res = resultant_univariate(&f, &g).unwrap();
            let gcd = f.gcd(&g);
            let has_common = gcd.degree().map_or(false, |d| d >= 1);
            prop_assert_eq!(Zero::is_zero(&res), has_common);
        }

        // Interpolated bivariate resultant agrees with the generic path.
        #[test]
        fn bivariate_agrees_with_ring_path(
            fc in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 0..=3), 1..=4),
            gc in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 0..=3), 1..=4),
        ) {
            let f = BiPoly::new(fc.iter().map(|r| Polynomial::from_ints(r)).collect());
            let g = BiPoly::new(gc.iter().map(|r| Polynomial::from_ints(r)).collect());
            prop_assume!(f.deg_outer().map_or(false, |d| d >= 1));
            prop_assume!(g.deg_outer().map_or(false, |d| d >= 1));
            let fast = resultant(&f, &g).unwrap();
            let slow = resultant_ring(&f.to_ring_poly(), &g.to_ring_poly()).unwrap();
            prop_assert_eq!(fast, Polynomial::from_coeffs(slow.coeffs));
        }
    }
}
