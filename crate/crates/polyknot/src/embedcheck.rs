//! Embedding certificates for polynomial maps ℝ → ℝⁿ: no critical points,
//! no double points, decided in exact arithmetic.
//!
//! Double points are the off-diagonal solutions of the divided-difference
//! system `D_i(r,s) = 0`. Each `D_i` is symmetric, so the system is rewritten
//! in `e1 = r+s`, `e2 = rs` and eliminated by pairwise resultants; parameter
//! values are recovered by back-substituting `e2 = w·e1 - w²` and every
//! candidate pair is then confirmed by an exact equality test of all
//! component values.

use crate::knotmodel::PolynomialKnot;
use crate::polycore::ring::ResultantError;
use crate::polycore::{
    real_roots, resultant, BiPoly, Polynomial, RatInterval, RealAlgebraic, RootList,
};
use crate::rational::{rat_i, rat_pq, Rat};
use num_traits::{Signed, Zero};

/// Interval width for reported root refinements (~1e-12).
pub fn default_refine_width() -> Rat {
    rat_pq(1, 1i64 << 40)
}

#[derive(Debug, thiserror::Error)]
pub enum EmbedError {
    #[error("degenerate elimination: {0}")]
    DegenerateElimination(String),
    #[error("resultant failure: {0}")]
    Resultant(#[from] ResultantError),
    #[error(transparent)]
    Poly(#[from] crate::polycore::PolyError),
}

/// Exact witnesses for the embedding decision.
#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    pub is_embedding: bool,
    pub critical_parameters: RootList,
    pub double_point_pairs: Vec<ParameterPair>,
    /// Set when the map coincides along a whole curve in (r,s)-space
    /// (possible for non-embeddings only); holds the gcd witness.
    pub coincidence_curve: Option<String>,
    pub notes: Vec<String>,
}

/// An unordered coincidence `k(r) = k(s)` reported with `r < s`.
#[derive(Debug, Clone)]
pub struct ParameterPair {
    pub r: RealAlgebraic,
    pub s: RealAlgebraic,
}

impl ParameterPair {
    pub fn approx(&self) -> (f64, f64) {
        (self.r.approx_f64(), self.s.approx_f64())
    }
}

/// Output of the double-point solver.
#[derive(Debug, Clone)]
pub struct DoublePoints {
    /// Distinct parameter values participating in coincidences, ascending.
    pub params: Vec<RealAlgebraic>,
    /// Index pairs `(i, j)`, `i < j`, into `params`.
    pub pairs: Vec<(usize, usize)>,
    /// Set when coincidences form a curve rather than isolated pairs.
    pub curve_witness: Option<String>,
    pub notes: Vec<String>,
}

impl DoublePoints {
    pub fn parameter_pairs(&self) -> Vec<ParameterPair> {
        self.pairs
            .iter()
            .map(|&(i, j)| ParameterPair {
                r: self.params[i].clone(),
                s: self.params[j].clone(),
            })
            .collect()
    }
}

// ---- dense bivariate polynomials ----

/// Dense bivariate polynomial; `co[i][j]` multiplies `a^i b^j` where `(a, b)`
/// are the current variable names (`(r, s)` or `(e1, e2)` or `(e1, w)`).
#[derive(Clone, PartialEq)]
pub(crate) struct Grid2 {
    co: Vec<Vec<Rat>>,
}

impl std::fmt::Debug for Grid2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display("a", "b"))
    }
}

impl Grid2 {
    fn zero() -> Self {
        Grid2 { co: Vec::new() }
    }

    fn normalize(mut co: Vec<Vec<Rat>>) -> Self {
        for row in &mut co {
            while row.last().map_or(false, |c| c.is_zero()) {
                row.pop();
            }
        }
        while co.last().map_or(false, |r| r.is_empty()) {
            co.pop();
        }
        Grid2 { co }
    }

    fn is_zero(&self) -> bool {
        self.co.iter().all(|r| r.is_empty())
    }

    fn constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.co.len() == 1 && self.co[0].len() == 1 {
            return Some(self.co[0][0].clone());
        }
        None
    }

    fn get(&self, i: usize, j: usize) -> Rat {
        self.co
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn add_to(&mut self, i: usize, j: usize, v: &Rat) {
        if self.co.len() <= i {
            self.co.resize(i + 1, Vec::new());
        }
        if self.co[i].len() <= j {
            self.co[i].resize(j + 1, Rat::zero());
        }
        let cur = &self.co[i][j] + v;
        self.co[i][j] = cur;
    }

    fn trim(self) -> Self {
        Grid2::normalize(self.co)
    }

    /// Divided difference `(p(a) - p(b)) / (a - b)`, a symmetric polynomial.
    pub(crate) fn divided_difference(p: &Polynomial) -> Grid2 {
        let mut g = Grid2::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if k == 0 || c.is_zero() {
                continue;
            }
            // (a^k - b^k)/(a - b) = sum_{j<k} a^j b^(k-1-j)
            for j in 0..k {
                g.add_to(j, k - 1 - j, c);
            }
        }
        g.trim()
    }

    /// Partial derivative in the first variable.
    fn d_first(&self) -> Grid2 {
        let mut g = Grid2::zero();
        for (i, row) in self.co.iter().enumerate() {
            if i == 0 {
                continue;
            }
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    g.add_to(i - 1, j, &(c * rat_i(i as i64)));
                }
            }
        }
        g.trim()
    }

    fn swap_vars(&self) -> Grid2 {
        let mut g = Grid2::zero();
        for (i, row) in self.co.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    g.add_to(j, i, c);
                }
            }
        }
        g.trim()
    }

    /// View with the second variable as the eliminated (outer) one.
    fn bipoly_outer_second(&self) -> BiPoly {
        let cols = self.co.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut coeffs = Vec::with_capacity(cols);
        for j in 0..cols {
            coeffs.push(Polynomial::from_coeffs(
                self.co.iter().map(|row| row.get(j).cloned().unwrap_or_else(Rat::zero)).collect(),
            ));
        }
        BiPoly::new(coeffs)
    }

    fn from_bipoly_outer_second(b: &BiPoly) -> Grid2 {
        let mut g = Grid2::zero();
        for (j, p) in b.coeffs.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    g.add_to(i, j, c);
                }
            }
        }
        g.trim()
    }

    /// Rewrites a symmetric polynomial in `(r, s)` as a polynomial in
    /// `e1 = r+s`, `e2 = rs`, by repeated leading-term subtraction.
    fn symmetric_to_elementary(&self) -> Grid2 {
        let mut rem = self.clone();
        let mut out = Grid2::zero();
        while !rem.is_zero() {
            // lex-leading term (largest i, then largest j); symmetry gives i >= j.
            let i = rem.co.len() - 1;
            let j = rem.co[i].len() - 1;
            let c = rem.co[i][j].clone();
            debug_assert!(i >= j, "input not symmetric");
            out.add_to(i - j, j, &c);
            // subtract c * (r+s)^(i-j) * (rs)^j
            let expansion = Grid2::e1_e2_monomial(i - j, j);
            for (a, row) in expansion.co.iter().enumerate() {
                for (b, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        rem.add_to(a, b, &(-(v * &c)));
                    }
                }
            }
            rem = rem.trim();
        }
        out.trim()
    }

    /// `(r+s)^m (rs)^k` expanded over `(r, s)`.
    fn e1_e2_monomial(m: usize, k: usize) -> Grid2 {
        let mut g = Grid2::zero();
        let mut binom = Rat::from_integer(1.into());
        for t in 0..=m {
            g.add_to(k + m - t, k + t, &binom);
            // next binomial coefficient C(m, t+1)
            binom = binom * rat_i((m - t) as i64) / rat_i(t as i64 + 1);
        }
        g
    }

    /// Substitutes `b = w*a - w^2` into a grid over `(a, b)`, returning a
    /// grid over `(a, w)`.
    fn substitute_second(&self) -> Grid2 {
        // (w*a - w^2)^j expanded: sum_t C(j,t) (-1)^(j-t) a^t w^(2j-t)
        let mut out = Grid2::zero();
        for (i, row) in self.co.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut binom = Rat::from_integer(1.into());
                for t in 0..=j {
                    let sign = if (j - t) % 2 == 1 { -&binom } else { binom.clone() };
                    out.add_to(i + t, 2 * j - t, &(c * &sign));
                    binom = binom * rat_i((j - t) as i64) / rat_i(t as i64 + 1);
                }
            }
        }
        out.trim()
    }

    fn eval_interval(&self, a: &RatInterval, b: &RatInterval) -> RatInterval {
        // Horner in the first variable, polynomial intervals in the second.
        let mut acc = RatInterval::point(Rat::zero());
        for row in self.co.iter().rev() {
            let row_poly = Polynomial::from_coeffs(row.clone());
            let row_val = RatInterval::eval_poly(&row_poly, b);
            acc = acc.mul(a).add(&row_val);
        }
        acc
    }

    pub(crate) fn display(&self, va: &str, vb: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, row) in self.co.iter().enumerate().rev() {
            for (j, c) in row.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let mut term = String::new();
                let mag = c.abs();
                if parts.is_empty() {
                    if c.is_negative() {
                        term.push('-');
                    }
                } else if c.is_negative() {
                    term.push_str(" - ");
                } else {
                    term.push_str(" + ");
                }
                use num_traits::One;
                let coeff_shown = !mag.is_one() || (i == 0 && j == 0);
                if coeff_shown {
                    term.push_str(&crate::rational::rat_to_string(&mag));
                }
                let mut var = |name: &str, e: usize, first: bool| {
                    if e == 0 {
                        return String::new();
                    }
                    let mut s = String::new();
                    if coeff_shown || !first {
                        s.push('*');
                    }
                    s.push_str(name);
                    if e > 1 {
                        s.push_str(&format!("^{e}"));
                    }
                    s
                };
                term.push_str(&var(va, i, true));
                term.push_str(&var(vb, j, i == 0));
                parts.push(term);
            }
        }
        parts.concat()
    }
}

// ---- bivariate gcd (content + primitive-part Euclid) ----

fn bipoly_content(f: &BiPoly) -> Polynomial {
    let mut g = Polynomial::zero();
    for c in &f.coeffs {
        g = g.gcd(c);
    }
    g
}

fn bipoly_div_content(f: &BiPoly, content: &Polynomial) -> BiPoly {
    BiPoly::new(f.coeffs.iter().map(|c| c.exact_div(content)).collect())
}

fn bipoly_primitive(f: &BiPoly) -> BiPoly {
    if f.is_zero() {
        return f.clone();
    }
    let c = bipoly_content(f);
    bipoly_div_content(f, &c)
}

fn bipoly_pseudo_rem(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let dg = g.deg_outer().expect("nonzero divisor");
    let lead = g.coeffs.last().unwrap().clone();
    let mut r = f.clone();
    while let Some(dr) = r.deg_outer() {
        if dr < dg {
            break;
        }
        let top = r.coeffs.last().unwrap().clone();
        // r := lead*r - top * u^(dr-dg) * g
        let mut coeffs: Vec<Polynomial> = r.coeffs.iter().map(|c| c * &lead).collect();
        for (k, gc) in g.coeffs.iter().enumerate() {
            let idx = dr - dg + k;
            coeffs[idx] = &coeffs[idx] - &(gc * &top);
        }
        r = BiPoly::new(coeffs);
    }
    r
}

/// Gcd in ℚ[first][second] up to a rational unit, primitive in the outer
/// variable of the `outer_second` view.
fn grid_gcd(a: &Grid2, b: &Grid2) -> Grid2 {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let fa = a.bipoly_outer_second();
    let fb = b.bipoly_outer_second();
    let ca = bipoly_content(&fa);
    let cb = bipoly_content(&fb);
    let content_gcd = ca.gcd(&cb);
    let mut p = bipoly_div_content(&fa, &ca);
    let mut q = bipoly_div_content(&fb, &cb);
    if p.deg_outer() < q.deg_outer() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = bipoly_pseudo_rem(&p, &q);
        p = q;
        q = bipoly_primitive(&r);
    }
    if p.deg_outer() == Some(0) {
        // primitive parts coprime in the outer variable
        let g = BiPoly::new(vec![content_gcd]);
        return Grid2::from_bipoly_outer_second(&g);
    }
    let g = BiPoly::new(p.coeffs.iter().map(|c| c * &content_gcd).collect());
    Grid2::from_bipoly_outer_second(&bipoly_primitive(&g))
}

fn grid_exact_div(f: &Grid2, g: &Grid2) -> Grid2 {
    use crate::polycore::Ring;
    let q = f
        .bipoly_outer_second()
        .to_ring_poly()
        .exact_div(&g.bipoly_outer_second().to_ring_poly());
    let coeffs = q
        .coeffs
        .into_iter()
        .map(|c| Polynomial::from_coeffs(c.coeffs))
        .collect();
    Grid2::from_bipoly_outer_second(&BiPoly::new(coeffs))
}

// ---- critical points ----

/// Parameters where all component derivatives vanish simultaneously: the
/// real roots of the gcd of the derivatives.
pub fn critical_points(k: &PolynomialKnot) -> RootList {
    let mut g = Polynomial::zero();
    for c in k.components() {
        g = g.gcd(&c.derivative());
    }
    if g.degree().map_or(true, |d| d == 0) {
        return RootList { roots: Vec::new() };
    }
    real_roots(&g, &default_refine_width()).expect("nonzero gcd")
}

// ---- value labels: exact equality classes of component values ----

/// Assigns each parameter (a root of the square-free `defining`) a label
/// such that two parameters share a label exactly when `component` takes
/// equal values at them.
fn value_labels(
    defining: &Polynomial,
    params: &mut [RealAlgebraic],
    component: &Polynomial,
) -> Vec<usize> {
    if params.len() <= 1 {
        return vec![0; params.len()];
    }
    if component.is_constant() {
        return vec![0; params.len()];
    }
    // Values component(param) are roots of Res_w(defining(w), y - component(w)).
    let f = BiPoly::new(
        defining
            .coeffs()
            .iter()
            .map(|c| Polynomial::constant(c.clone()))
            .collect(),
    );
    let mut gc: Vec<Polynomial> = component
        .coeffs()
        .iter()
        .map(|c| Polynomial::constant(-c.clone()))
        .collect();
    gc[0] = &gc[0] + &Polynomial::x(); // y - component(w), y is the kept variable
    let g = BiPoly::new(gc);
    let m = resultant(&f, &g).expect("defining polynomial has positive degree");
    debug_assert!(!m.is_zero());
    let mut value_roots = real_roots(&m.squarefree_part(), &rat_pq(1, 1024))
        .expect("nonzero value polynomial")
        .roots;
    let mut labels = Vec::with_capacity(params.len());
    for p in params.iter_mut() {
        loop {
            let img = RatInterval::eval_poly(component, &p.interval());
            let hits: Vec<usize> = value_roots
                .iter()
                .enumerate()
                .filter(|(_, r)| r.value.interval().intersects(&img))
                .map(|(i, _)| i)
                .collect();
            if hits.len() == 1 {
                labels.push(hits[0]);
                break;
            }
            // The true value is always among the hits; shrink until unique.
            p.refine();
            for i in hits {
                value_roots[i].value.refine();
            }
        }
    }
    labels
}

// ---- the double point solver ----

struct Elimination {
    /// Square-free polynomial whose real roots contain every double-point
    /// parameter.
    recovery: Polynomial,
    notes: Vec<String>,
}

/// Pairwise elimination of `e2`, then parameter recovery through the
/// back-substitution `e2 = w*e1 - w^2`.
fn symmetric_elimination(system: &[Grid2]) -> Result<Option<Elimination>, EmbedError> {
    let sym: Vec<Grid2> = system.iter().map(|d| d.symmetric_to_elementary()).collect();
    let mut e1_polys: Vec<Polynomial> = Vec::new();
    let mut usable_pair = false;
    for i in 0..sym.len() {
        for j in i + 1..sym.len() {
            let fi = sym[i].bipoly_outer_second();
            let fj = sym[j].bipoly_outer_second();
            match (fi.deg_outer(), fj.deg_outer()) {
                (Some(0), Some(0)) => {
                    // both free of e2: common zeros need a shared e1 root
                    let g = fi.coeffs[0].gcd(&fj.coeffs[0]);
                    usable_pair = true;
                    if g.degree().map_or(false, |d| d >= 1) {
                        e1_polys.push(g);
                    } else {
                        return Ok(Some(Elimination {
                            recovery: Polynomial::one(),
                            notes: vec!["symmetric-elimination: e1 system inconsistent".into()],
                        }));
                    }
                }
                _ => {
                    let res = resultant(&fi, &fj)?;
                    if !res.is_zero() {
                        usable_pair = true;
                        e1_polys.push(res);
                    }
                }
            }
        }
    }
    if !usable_pair || e1_polys.is_empty() {
        return Ok(None); // every pairwise resultant vanished identically
    }
    e1_polys.sort_by_key(|p| p.deg_or_0());
    let mut g = e1_polys[0].clone();
    for p in &e1_polys[1..] {
        g = g.gcd(p);
    }
    if g.degree() == Some(0) {
        return Ok(Some(Elimination {
            recovery: Polynomial::one(),
            notes: vec!["symmetric-elimination: no common e1 values".into()],
        }));
    }
    let g = g.squarefree_part();
    // Recover parameters: w is a double-point parameter only if, for the
    // matching e1 root of g, every D̂_i vanishes at e2 = w*e1 - w^2.
    let g_bi = BiPoly::new(g.coeffs().iter().map(|c| Polynomial::constant(c.clone())).collect());
    let mut recovery: Option<Polynomial> = None;
    for d in &sym {
        let subst = d.substitute_second(); // grid over (e1, w)
        let bi = subst.swap_vars().bipoly_outer_second(); // outer e1, coeffs in w
        if bi.deg_outer().is_none() {
            continue;
        }
        let res = if bi.deg_outer() == Some(0) {
            bi.coeffs[0].clone()
        } else {
            resultant(&g_bi, &bi)?
        };
        if res.is_zero() {
            continue;
        }
        recovery = Some(match recovery {
            None => res,
            Some(acc) => {
                if acc.deg_or_0() <= res.deg_or_0() {
                    acc.gcd(&res)
                } else {
                    res.gcd(&acc)
                }
            }
        });
    }
    match recovery {
        Some(r) => Ok(Some(Elimination {
            recovery: r.squarefree_part(),
            notes: vec![format!(
                "symmetric-elimination: e1 gcd degree {}, recovery degree {}",
                g.deg_or_0(),
                r.squarefree_part().deg_or_0()
            )],
        })),
        None => Ok(None),
    }
}

/// Fallback: eliminate `s` directly from the (r, s) system.
fn direct_elimination(system: &[Grid2]) -> Result<Elimination, EmbedError> {
    let mut polys: Vec<Polynomial> = Vec::new();
    for i in 0..system.len() {
        for j in i + 1..system.len() {
            let fi = system[i].swap_vars().bipoly_outer_second(); // outer r? see below
            let fj = system[j].swap_vars().bipoly_outer_second();
            // outer variable here is r after the swap; by symmetry of the
            // D_i the eliminated variable does not matter.
            match (fi.deg_outer(), fj.deg_outer()) {
                (Some(0), Some(0)) => {
                    let g = fi.coeffs[0].gcd(&fj.coeffs[0]);
                    if g.degree().map_or(false, |d| d >= 1) {
                        polys.push(g);
                    }
                }
                _ => {
                    let res = resultant(&fi, &fj)?;
                    if !res.is_zero() {
                        polys.push(res);
                    }
                }
            }
        }
    }
    if system.len() == 1 {
        // single constraint: isolated coincidences can still exist where the
        // curve D = 0 meets its own critical set; callers reach this path
        // only after the curve test said "no real curve".
        let d = &system[0];
        for other in [d.d_first(), d.swap_vars().d_first().swap_vars()] {
            let fi = d.bipoly_outer_second();
            let fo = other.bipoly_outer_second();
            if fi.deg_outer().map_or(false, |x| x >= 1) || fo.deg_outer().map_or(false, |x| x >= 1)
            {
                if let Ok(res) = resultant(&fi, &fo) {
                    if !res.is_zero() {
                        polys.push(res);
                    }
                }
            }
        }
    }
    if polys.is_empty() {
        return Err(EmbedError::DegenerateElimination(
            "all pairwise eliminations vanish identically".into(),
        ));
    }
    polys.sort_by_key(|p| p.deg_or_0());
    let mut g = polys[0].clone();
    for p in &polys[1..] {
        g = g.gcd(p);
    }
    if g.degree() == Some(0) {
        return Ok(Elimination {
            recovery: Polynomial::one(),
            notes: vec!["direct-elimination: no common parameter values".into()],
        });
    }
    Ok(Elimination {
        recovery: g.squarefree_part(),
        notes: vec![format!(
            "direct-elimination: recovery degree {}",
            g.squarefree_part().deg_or_0()
        )],
    })
}

/// Does the real zero set of `g` (a symmetric bivariate polynomial) contain
/// a point off the diagonal `r = s` on a one-dimensional branch?
fn has_offdiagonal_real_branch(g: &Grid2) -> Result<bool, EmbedError> {
    let bi = g.bipoly_outer_second(); // outer = s, coeffs in r
    let ds = bi.deg_outer().unwrap_or(0);
    if ds == 0 {
        // g depends on r alone; its zero set is vertical lines
        let gr = bi.coeffs[0].clone();
        let roots = real_roots(&gr.squarefree_part(), &rat_pq(1, 16))?;
        return Ok(!roots.is_empty());
    }
    // Critical r-values: roots of Res_s(g, dg/ds) and of the leading
    // coefficient; sample one rational point per cell in between.
    let ds_grid = g.swap_vars().d_first().swap_vars(); // d/ds
    let mut boundary = bi.coeffs.last().unwrap().clone();
    let dsbi = ds_grid.bipoly_outer_second();
    if dsbi.deg_outer().map_or(false, |d| d >= 1) || bi.deg_outer().map_or(false, |d| d >= 1) {
        if let Ok(res) = resultant(&bi, &dsbi) {
            if !res.is_zero() {
                boundary = &boundary * &res;
            }
        }
    }
    let mut samples: Vec<Rat> = Vec::new();
    if boundary.degree().map_or(false, |d| d >= 1) {
        let roots = real_roots(&boundary.squarefree_part(), &rat_pq(1, 16))?;
        let mut cuts: Vec<Rat> = Vec::new();
        for r in &roots.roots {
            cuts.push(r.value.lo().clone());
            cuts.push(r.value.hi().clone());
        }
        cuts.sort();
        if let (Some(first), Some(last)) = (cuts.first(), cuts.last()) {
            samples.push(first - rat_i(1));
            samples.push(last + rat_i(1));
            for w in cuts.windows(2) {
                samples.push((&w[0] + &w[1]) / rat_i(2));
            }
        }
    } else {
        samples.push(Rat::zero());
        samples.push(rat_i(1));
        samples.push(rat_i(-1));
    }
    for r0 in samples {
        let fiber = Polynomial::from_coeffs(bi.coeffs.iter().map(|c| c.eval(&r0)).collect());
        if fiber.is_zero() {
            return Ok(true); // whole vertical line inside the zero set
        }
        if fiber.is_constant() {
            continue;
        }
        let roots = real_roots(&fiber.squarefree_part(), &rat_pq(1, 16))?;
        if roots.is_empty() {
            continue;
        }
        let on_diag = fiber.eval(&r0).is_zero();
        if roots.len() >= 2 || !on_diag {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All coincidences `k(r) = k(s)`, `r ≠ s`, as exact parameter pairs.
pub fn double_points(k: &PolynomialKnot) -> Result<DoublePoints, EmbedError> {
    let mut notes = Vec::new();

    let mut system: Vec<Grid2> = Vec::new();
    for c in k.components() {
        let d = Grid2::divided_difference(c);
        if let Some(v) = d.constant() {
            if v.is_zero() {
                continue; // constant component: no constraint
            }
            // some component already separates all parameter pairs
            return Ok(DoublePoints {
                params: Vec::new(),
                pairs: Vec::new(),
                curve_witness: None,
                notes: vec![format!(
                    "component {} has constant nonzero divided difference",
                    c.display("t")
                )],
            });
        }
        system.push(d);
    }
    debug_assert!(!system.is_empty(), "knot has a nonconstant component");

    // Shared factor of all divided differences: coincidence along a curve,
    // or isolated coincidences hiding inside the common factor.
    let mut shared = system[0].clone();
    for d in &system[1..] {
        shared = grid_gcd(&shared, d);
    }
    let mut extra_recovery = Polynomial::one();
    if shared.constant().is_none() {
        if has_offdiagonal_real_branch(&shared)? {
            return Ok(DoublePoints {
                params: Vec::new(),
                pairs: Vec::new(),
                curve_witness: Some(shared.display("r", "s")),
                notes: vec!["common divided-difference factor with a real branch".into()],
            });
        }
        notes.push(format!(
            "deflated common factor without real off-diagonal branch: {}",
            shared.display("r", "s")
        ));
        // Isolated real zeros of the shared factor are critical points of
        // it; eliminate from {g, g_r}.
        let bi = shared.swap_vars().bipoly_outer_second();
        let bir = shared.d_first().swap_vars().bipoly_outer_second();
        if bir.deg_outer().is_some() {
            if let Ok(res) = resultant(&bi, &bir) {
                if !res.is_zero() {
                    extra_recovery = res.squarefree_part();
                }
            }
        }
        system = system.iter().map(|d| grid_exact_div(d, &shared)).collect();
        system.retain(|d| match d.constant() {
            Some(v) => {
                debug_assert!(!v.is_zero());
                false
            }
            None => true,
        });
    }

    let elimination = if system.len() >= 2 {
        match symmetric_elimination(&system)? {
            Some(e) => e,
            None => {
                notes.push("symmetric elimination vanished identically; direct fallback".into());
                direct_elimination(&system)?
            }
        }
    } else if system.len() == 1 {
        direct_elimination(&system)?
    } else {
        Elimination {
            recovery: Polynomial::one(),
            notes: vec!["deflated system empty".into()],
        }
    };
    notes.extend(elimination.notes);

    let mut recovery = elimination.recovery;
    if extra_recovery.degree().map_or(false, |d| d >= 1) {
        recovery = (&recovery * &extra_recovery).squarefree_part();
    }
    // The exact value-matching step below scales with the recovery degree;
    // intersecting with the direct (r, s) elimination cuts spurious roots
    // that the back-substitution introduces (both sets contain every true
    // double-point parameter).
    if recovery.degree().map_or(false, |d| d > 8) && system.len() >= 2 {
        if let Ok(direct) = direct_elimination(&system) {
            if direct.recovery.degree().map_or(false, |d| d >= 1) {
                recovery = recovery.gcd(&direct.recovery).squarefree_part();
                notes.push(format!(
                    "pruned recovery against direct elimination: degree {}",
                    recovery.deg_or_0()
                ));
            } else {
                recovery = Polynomial::one();
            }
        }
    }
    if recovery.degree().map_or(true, |d| d == 0) {
        return Ok(DoublePoints {
            params: Vec::new(),
            pairs: Vec::new(),
            curve_witness: None,
            notes,
        });
    }

    let roots = real_roots(&recovery, &default_refine_width())?;
    let mut params: Vec<RealAlgebraic> = roots.roots.into_iter().map(|r| r.value).collect();
    if params.len() < 2 {
        return Ok(DoublePoints {
            params: Vec::new(),
            pairs: Vec::new(),
            curve_witness: None,
            notes,
        });
    }

    // Exact verification: parameters coincide under k exactly when every
    // component value matches; labels decide this with no tolerance.
    let mut label_vectors: Vec<Vec<usize>> = vec![Vec::new(); params.len()];
    for c in k.components() {
        let labels = value_labels(&recovery, &mut params, c);
        for (i, l) in labels.into_iter().enumerate() {
            label_vectors[i].push(l);
        }
    }
    let mut pairs = Vec::new();
    for i in 0..params.len() {
        for j in i + 1..params.len() {
            if label_vectors[i] == label_vectors[j] {
                pairs.push((i, j));
            }
        }
    }
    // Keep only parameters that participate in a coincidence.
    let mut used: Vec<usize> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
    used.sort_unstable();
    used.dedup();
    let remap: Vec<Option<usize>> = {
        let mut m = vec![None; params.len()];
        for (new, &old) in used.iter().enumerate() {
            m[old] = Some(new);
        }
        m
    };
    let mut kept: Vec<RealAlgebraic> = Vec::with_capacity(used.len());
    for &i in &used {
        kept.push(params[i].clone());
    }
    let pairs: Vec<(usize, usize)> = pairs
        .into_iter()
        .map(|(i, j)| (remap[i].unwrap(), remap[j].unwrap()))
        .collect();
    Ok(DoublePoints {
        params: kept,
        pairs,
        curve_witness: None,
        notes,
    })
}

/// Full embedding decision with exact witnesses.
pub fn verify_embedding(k: &PolynomialKnot) -> Result<EmbeddingReport, EmbedError> {
    let critical = critical_points(k);
    let dp = double_points(k)?;
    let pairs = dp.parameter_pairs();
    let is_embedding = critical.is_empty() && pairs.is_empty() && dp.curve_witness.is_none();
    let mut notes = dp.notes;
    if let Some(w) = &dp.curve_witness {
        notes.push(format!("not an embedding: non-injective on a curve ({w} = 0)"));
    }
    Ok(EmbeddingReport {
        is_embedding,
        critical_parameters: critical,
        double_point_pairs: pairs,
        coincidence_curve: dp.curve_witness,
        notes,
    })
}

/// Embedding decision restricted to parameters in `[lo, hi]`: critical
/// points inside the interval, coincidences with both parameters inside.
pub fn verify_embedding_on_interval(
    k: &PolynomialKnot,
    lo: &Rat,
    hi: &Rat,
) -> Result<EmbeddingReport, EmbedError> {
    let mut report = verify_embedding(k)?;
    let inside = |v: &mut RealAlgebraic| -> bool {
        let mut a = RealAlgebraic::from_rational(lo.clone());
        let mut b = RealAlgebraic::from_rational(hi.clone());
        v.cmp_refine(&mut a) != std::cmp::Ordering::Less
            && v.cmp_refine(&mut b) != std::cmp::Ordering::Greater
    };
    report
        .critical_parameters
        .roots
        .retain_mut(|r| inside(&mut r.value));
    report
        .double_point_pairs
        .retain_mut(|p| inside(&mut p.r) && inside(&mut p.s));
    report.is_embedding = report.critical_parameters.is_empty()
        && report.double_point_pairs.is_empty()
        && report.coincidence_curve.is_none();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knotmodel::catalog_get;

    fn shastri() -> PolynomialKnot {
        catalog_get("shastri-trefoil").unwrap().knot.clone()
    }

    #[test]
    fn divided_difference_matches_hand_expansion() {
        // x = t^3 - 3t: D = r^2 + rs + s^2 - 3
        let d = Grid2::divided_difference(&Polynomial::from_ints(&[0, -3, 0, 1]));
        assert_eq!(d.get(2, 0), rat_i(1));
        assert_eq!(d.get(1, 1), rat_i(1));
        assert_eq!(d.get(0, 2), rat_i(1));
        assert_eq!(d.get(0, 0), rat_i(-3));
        // symmetric rewrite: e1^2 - e2 - 3
        let s = d.symmetric_to_elementary();
        assert_eq!(s.get(2, 0), rat_i(1));
        assert_eq!(s.get(0, 1), rat_i(-1));
        assert_eq!(s.get(0, 0), rat_i(-3));
        // y = t^4 - 4t^2: D̂ = e1^3 - 2 e1 e2 - 4 e1
        let dy = Grid2::divided_difference(&Polynomial::from_ints(&[0, 0, -4, 0, 1]))
            .symmetric_to_elementary();
        assert_eq!(dy.get(3, 0), rat_i(1));
        assert_eq!(dy.get(1, 1), rat_i(-2));
        assert_eq!(dy.get(1, 0), rat_i(-4));
    }

    #[test]
    fn critical_point_examples() {
        // Shastri trefoil: gcd(3t^2-3, 4t^3-8t, 5t^4-10) is constant
        assert!(critical_points(&shastri()).is_empty());
        // cusp (t^2, t^3): derivative vanishes at 0
        let cusp = PolynomialKnot::from_ints(&[&[0, 0, 1], &[0, 0, 0, 1]]);
        let crits = critical_points(&cusp);
        assert_eq!(crits.len(), 1);
        assert_eq!(crits.roots[0].value.approx_f64(), 0.0);
        // (t^3 - 3t, c, c): critical at ±1
        let degenerate = PolynomialKnot::from_ints(&[&[0, -3, 0, 1], &[5], &[5]]);
        let approx = critical_points(&degenerate).approx();
        assert_eq!(approx.len(), 2);
        assert!((approx[0] + 1.0).abs() < 1e-9 && (approx[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn trefoil_projection_has_three_double_points() {
        // (t^3-3t, t^4-4t^2): pairs (-√3, √3) and two with e1 = ±√2, e2 = -1
        let proj = shastri().project(0, 1);
        let dp = double_points(&proj).unwrap();
        assert_eq!(dp.pairs.len(), 3);
        let mut approx: Vec<(f64, f64)> = dp
            .parameter_pairs()
            .iter()
            .map(|p| p.approx())
            .collect();
        approx.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let s3 = 3f64.sqrt();
        let s2 = 2f64.sqrt();
        let s6 = 6f64.sqrt();
        // roots of w^2 ∓ √2 w - 1: (±√2 ± √6)/2
        let expect = [
            (-s3, s3),
            ((-s2 - s6) / 2.0, (-s2 + s6) / 2.0),
            ((s2 - s6) / 2.0, (s2 + s6) / 2.0),
        ];
        let mut expect: Vec<(f64, f64)> = expect.to_vec();
        expect.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for (got, want) in approx.iter().zip(expect.iter()) {
            assert!((got.0 - want.0).abs() < 1e-9, "{got:?} vs {want:?}");
            assert!((got.1 - want.1).abs() < 1e-9, "{got:?} vs {want:?}");
        }
        // sums and products land where the hand elimination says
        for p in dp.parameter_pairs() {
            let e1 = p.r.approx_f64() + p.s.approx_f64();
            let e2 = p.r.approx_f64() * p.s.approx_f64();
            assert!(
                (e1.abs() < 1e-9 && (e2 + 3.0).abs() < 1e-8)
                    || ((e1.abs() - s2).abs() < 1e-9 && (e2 + 1.0).abs() < 1e-8)
            );
        }
    }

    #[test]
    fn simple_double_point_pair() {
        // (t^2, t^3 - t): s = -t forces coincidence exactly at (-1, 1)
        let k = PolynomialKnot::from_ints(&[&[0, 0, 1], &[0, -1, 0, 1]]);
        let dp = double_points(&k).unwrap();
        assert_eq!(dp.pairs.len(), 1);
        let p = &dp.parameter_pairs()[0];
        assert!((p.r.approx_f64() + 1.0).abs() < 1e-9);
        assert!((p.s.approx_f64() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn cusp_has_no_double_points() {
        let cusp = PolynomialKnot::from_ints(&[&[0, 0, 1], &[0, 0, 0, 1]]);
        let dp = double_points(&cusp).unwrap();
        assert!(dp.pairs.is_empty());
        assert!(dp.curve_witness.is_none());
    }

    #[test]
    fn shastri_trefoil_is_an_embedding() {
        let report = verify_embedding(&shastri()).unwrap();
        assert!(report.is_embedding);
        assert!(report.critical_parameters.is_empty());
        assert!(report.double_point_pairs.is_empty());
    }

    #[test]
    fn non_embeddings_get_witnesses() {
        let cusp = PolynomialKnot::from_ints(&[&[0, 0, 1], &[0, 0, 0, 1]]);
        let r = verify_embedding(&cusp).unwrap();
        assert!(!r.is_embedding);
        assert_eq!(r.critical_parameters.len(), 1);

        let dbl = PolynomialKnot::from_ints(&[&[0, 0, 1], &[0, -1, 0, 1], &[0]]);
        let r = verify_embedding(&dbl).unwrap();
        assert!(!r.is_embedding);
        assert_eq!(r.double_point_pairs.len(), 1);
        let (a, b) = r.double_point_pairs[0].approx();
        assert!((a + 1.0).abs() < 1e-9 && (b - 1.0).abs() < 1e-9);
    }

    #[test]
    fn curve_of_coincidences_is_reported() {
        // (t^2, t^4): coincident along r + s = 0
        let k = PolynomialKnot::from_ints(&[&[0, 0, 1], &[0, 0, 0, 0, 1]]);
        let dp = double_points(&k).unwrap();
        assert!(dp.curve_witness.is_some(), "{:?}", dp.notes);

        // (t^3-3t, c, c): non-injective along a curve
        let k = PolynomialKnot::from_ints(&[&[0, -3, 0, 1], &[5], &[5]]);
        let dp = double_points(&k).unwrap();
        assert!(dp.curve_witness.is_some());

        // but (t^3, t^3): gcd r^2+rs+s^2 has no real off-diagonal zero,
        // and the map is injective
        let k = PolynomialKnot::from_ints(&[&[0, 0, 0, 1], &[0, 0, 0, 1]]);
        let dp = double_points(&k).unwrap();
        assert!(dp.curve_witness.is_none());
        assert!(dp.pairs.is_empty());
    }

    #[test]
    fn interval_restriction_filters_witnesses() {
        let dbl = PolynomialKnot::from_ints(&[&[0, 0, 1], &[0, -1, 0, 1]]);
        let full = verify_embedding(&dbl).unwrap();
        assert!(!full.is_embedding);
        let restricted =
            verify_embedding_on_interval(&dbl, &rat_pq(-1, 2), &rat_i(2)).unwrap();
        assert!(restricted.is_embedding, "pair (-1, 1) leaves the window");
        let covering = verify_embedding_on_interval(&dbl, &rat_i(-2), &rat_i(2)).unwrap();
        assert!(!covering.is_embedding);
    }

    #[test]
    fn affine_left_composition_preserves_witnesses() {
        // acceptance-level invariant, checked here on one non-embedding:
        // witnesses are parameter values, unchanged by left affine maps
        let dbl = PolynomialKnot::from_ints(&[&[0, 0, 1], &[0, -1, 0, 1]]);
        let transformed = PolynomialKnot::new(vec![
            // (2x + y + 1, x - y)
            {
                let x = dbl.component(0);
                let y = dbl.component(1);
                &(&x.scale(&rat_i(2)) + y) + &Polynomial::one()
            },
            &dbl.component(0).clone() - dbl.component(1),
        ])
        .unwrap();
        let a = verify_embedding(&dbl).unwrap();
        let b = verify_embedding(&transformed).unwrap();
        assert_eq!(a.double_point_pairs.len(), b.double_point_pairs.len());
        for (p, q) in a.double_point_pairs.iter().zip(&b.double_point_pairs) {
            assert!((p.approx().0 - q.approx().0).abs() < 1e-9);
            assert!((p.approx().1 - q.approx().1).abs() < 1e-9);
        }
    }

    use crate::rational::{rat_i, rat_pq};
}
