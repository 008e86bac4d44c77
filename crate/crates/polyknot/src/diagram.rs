//! Planar diagrams of space knots: crossing extraction from a coordinate
//! projection, Gauss and PD codes, Kauffman-bracket Jones polynomial,
//! Alexander polynomial, knot-type identification, and the degree-bound
//! engine.
//!
//! Crossing sign convention (the source text fixes none): a crossing is
//! positive when the frame (over-tangent, under-tangent) is right-handed in
//! the projection plane, orientations taken along increasing parameter.

pub mod laurent;

pub use laurent::LaurentPolynomial;

use crate::embedcheck::{self, EmbedError, EmbeddingReport};
use crate::knotmodel::{knot_types, KnotTypeRecord, PolynomialKnot};
use crate::polycore::{Polynomial, RatInterval, RealAlgebraic};
use crate::rational::{rat_i, rat_pq, Rat};
use num_traits::{Signed, Zero};

#[derive(Debug, thiserror::Error)]
pub enum DiagramError {
    #[error("input is not an embedding; diagram extraction needs one")]
    NotAnEmbedding,
    #[error("non-generic axis {axis:?}: {reason}; try another axis or a small rational rotation")]
    NonGenericAxis { axis: Axis, reason: String },
    #[error("crossing budget exceeded: {crossings} crossings, state sum capped at 2^24")]
    CrossingBudget { crossings: usize },
    #[error("diagram extraction needs a 3-component knot, got {0}")]
    WrongDimension(usize),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    /// Projection plane indices and the height index, cyclically ordered so
    /// the retained frame stays right-handed.
    fn split(self) -> (usize, usize, usize) {
        match self {
            Axis::X => (1, 2, 0),
            Axis::Y => (2, 0, 1),
            Axis::Z => (0, 1, 2),
        }
    }
}

/// A transverse crossing of the projected curve.
#[derive(Debug, Clone)]
pub struct Crossing {
    /// Parameter pair with `r < s`.
    pub r: RealAlgebraic,
    pub s: RealAlgebraic,
    /// Planar location (refined floating value).
    pub position: (f64, f64),
    pub sign: i8,
    /// Whether the strand through `s` passes over the strand through `r`.
    pub over_is_second: bool,
}

/// A knot diagram: ordered crossing visits along the curve, closed at
/// infinity (the closure contributes no crossings; see `closure_note`).
#[derive(Debug, Clone)]
pub struct Diagram {
    pub crossings: Vec<Crossing>,
    /// Traversal order by parameter: each crossing appears twice.
    pub visits: Vec<Visit>,
    pub writhe: i64,
    pub closure_note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Visit {
    pub crossing: usize,
    pub over: bool,
}

impl Diagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Extended Gauss code: `O`/`U`, 1-based crossing label, sign.
    pub fn gauss_code(&self) -> String {
        self.visits
            .iter()
            .map(|v| {
                format!(
                    "{}{}{}",
                    if v.over { "O" } else { "U" },
                    v.crossing + 1,
                    if self.crossings[v.crossing].sign > 0 { "+" } else { "-" }
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// PD tuples over 0-based arc labels; arc `k` runs from visit `k` to
    /// visit `k+1` (cyclically, through the closure).
    pub fn pd_tuples(&self) -> Vec<[usize; 4]> {
        pd_from_traversal(&self.visits, &self.signs())
    }

    /// PD code in standard notation with 1-based arc labels.
    pub fn pd_code(&self) -> String {
        self.pd_tuples()
            .iter()
            .map(|t| format!("X[{},{},{},{}]", t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn signs(&self) -> Vec<i8> {
        self.crossings.iter().map(|c| c.sign).collect()
    }

    /// Gauss-code validity: every crossing appears exactly twice, once over
    /// and once under.
    pub fn is_valid_double_occurrence(&self) -> bool {
        let c = self.crossings.len();
        if self.visits.len() != 2 * c {
            return false;
        }
        let mut seen = vec![(0usize, 0usize); c];
        for v in &self.visits {
            if v.over {
                seen[v.crossing].0 += 1;
            } else {
                seen[v.crossing].1 += 1;
            }
        }
        seen.iter().all(|&(o, u)| o == 1 && u == 1)
    }
}

fn pd_from_traversal(visits: &[Visit], signs: &[i8]) -> Vec<[usize; 4]> {
    let two_c = visits.len();
    let mut under_pos = vec![usize::MAX; signs.len()];
    let mut over_pos = vec![usize::MAX; signs.len()];
    for (p, v) in visits.iter().enumerate() {
        if v.over {
            over_pos[v.crossing] = p;
        } else {
            under_pos[v.crossing] = p;
        }
    }
    (0..signs.len())
        .map(|c| {
            let p = under_pos[c];
            let q = over_pos[c];
            let ui = (p + two_c - 1) % two_c;
            let uo = p;
            let oi = (q + two_c - 1) % two_c;
            let oo = q;
            // counterclockwise from the incoming under arc; positive
            // crossings carry the over strand from slot d to slot b
            if signs[c] > 0 {
                [ui, oo, uo, oi]
            } else {
                [ui, oi, uo, oo]
            }
        })
        .collect()
}

/// Exact sign of an expression in two refinable numbers, by interval
/// refinement; `None` when undecided at the depth cap (tangency suspected).
fn refined_sign(
    a: &mut RealAlgebraic,
    b: &mut RealAlgebraic,
    eval: impl Fn(&RatInterval, &RatInterval) -> RatInterval,
    max_rounds: usize,
) -> Option<i8> {
    for _ in 0..max_rounds {
        let img = eval(&a.interval(), &b.interval());
        match img.sign() {
            Some(0) | None => {
                a.refine();
                b.refine();
            }
            Some(s) => return Some(s),
        }
    }
    None
}

/// Builds the planar diagram of `k` projected along `axis`.
pub fn build_diagram(k: &PolynomialKnot, axis: Axis) -> Result<Diagram, DiagramError> {
    let report = embedcheck::verify_embedding(k)?;
    build_diagram_with_report(k, axis, &report)
}

pub(crate) fn build_diagram_with_report(
    k: &PolynomialKnot,
    axis: Axis,
    report: &EmbeddingReport,
) -> Result<Diagram, DiagramError> {
    if k.ambient_dimension() != 3 {
        return Err(DiagramError::WrongDimension(k.ambient_dimension()));
    }
    if !report.is_embedding {
        return Err(DiagramError::NotAnEmbedding);
    }
    let (ix, iy, iz) = axis.split();
    let px = k.component(ix).clone();
    let py = k.component(iy).clone();
    let height = k.component(iz);
    let proj = k.project(ix, iy);

    let non_generic = |reason: &str| DiagramError::NonGenericAxis {
        axis,
        reason: reason.to_string(),
    };

    let dp = embedcheck::double_points(&proj)?;
    if dp.curve_witness.is_some() {
        return Err(non_generic("projection is non-injective along a curve"));
    }
    // triple point: one parameter in two coincidence pairs
    let mut uses = vec![0usize; dp.params.len()];
    for &(i, j) in &dp.pairs {
        uses[i] += 1;
        uses[j] += 1;
    }
    if uses.iter().any(|&u| u > 1) {
        return Err(non_generic("triple point in projection"));
    }

    let dx = px.derivative();
    let dy = py.derivative();
    let mut params = dp.params.clone();
    let mut crossings = Vec::with_capacity(dp.pairs.len());
    let mut visit_at_param: Vec<Option<Visit>> = vec![None; params.len()];
    for (cid, &(i, j)) in dp.pairs.iter().enumerate() {
        let (left, right) = params.split_at_mut(j);
        let (r, s) = (&mut left[i], &mut right[0]);
        // transversality: projected tangents at r and s are independent
        let cross_sign = refined_sign(
            r,
            s,
            |ir, is| {
                let a = RatInterval::eval_poly(&dx, ir).mul(&RatInterval::eval_poly(&dy, is));
                let b = RatInterval::eval_poly(&dy, ir).mul(&RatInterval::eval_poly(&dx, is));
                a.sub(&b)
            },
            220,
        )
        .ok_or_else(|| non_generic("tangential double point"))?;
        // heights differ because k is an embedding
        let height_sign = refined_sign(
            r,
            s,
            |ir, is| {
                RatInterval::eval_poly(height, is).sub(&RatInterval::eval_poly(height, ir))
            },
            100_000,
        )
        .expect("embedding has distinct heights over a projection crossing");
        let over_is_second = height_sign > 0;
        // positive crossing ⟺ (over, under) frame right-handed
        let sign = if over_is_second { -cross_sign } else { cross_sign };
        r.refine_to_width(&rat_pq(1, 1i64 << 40));
        let position = (px.eval_f64(r.approx_f64()), py.eval_f64(r.approx_f64()));
        crossings.push(Crossing {
            r: r.clone(),
            s: s.clone(),
            position,
            sign,
            over_is_second,
        });
        visit_at_param[i] = Some(Visit {
            crossing: cid,
            over: !over_is_second,
        });
        visit_at_param[j] = Some(Visit {
            crossing: cid,
            over: over_is_second,
        });
    }
    // dp.params is ascending, so traversal order is the index order
    let visits: Vec<Visit> = visit_at_param.into_iter().flatten().collect();
    debug_assert_eq!(visits.len(), 2 * crossings.len());

    let closure_note = closure_certificate(&px, &py, &crossings)?;
    let writhe = crossings.iter().map(|c| c.sign as i64).sum();
    let d = Diagram {
        crossings,
        visits,
        writhe,
        closure_note,
    };
    debug_assert!(d.is_valid_double_occurrence());
    Ok(d)
}

/// Certifies that closing the two ends through infinity adds no crossings:
/// every crossing parameter lies in `[-T, T]` and beyond `T` the projected
/// curve stays outside the disk of squared radius `R²` that contains every
/// crossing.
fn closure_certificate(
    px: &Polynomial,
    py: &Polynomial,
    crossings: &[Crossing],
) -> Result<String, DiagramError> {
    if crossings.is_empty() {
        return Ok("closure at infinity adds no crossings: projection has none".into());
    }
    let mut radius_sq = Rat::zero();
    for c in crossings {
        let i = c.r.interval();
        let v = RatInterval::eval_poly(px, &i)
            .square()
            .add(&RatInterval::eval_poly(py, &i).square());
        if v.hi > radius_sq {
            radius_sq = v.hi.clone();
        }
    }
    let r2 = radius_sq + rat_i(1);
    let gauge = &(&(px * px) + &(py * py)) - &Polynomial::constant(r2.clone());
    let t = gauge
        .root_bound()
        .expect("projection nonconstant, so the gauge has positive degree");
    Ok(format!(
        "closure at infinity adds no crossings: all crossing parameters lie in [-T, T] and |projection|^2 > R^2 outside, T = {}, R^2 = {}",
        crate::rational::rat_to_string(&t),
        crate::rational::rat_to_string(&r2),
    ))
}

// ---- Kauffman bracket / Jones ----

/// Jones polynomial via the Kauffman-bracket state sum, writhe-normalized.
/// Diagrams over 24 crossings exceed the 2^24-state budget.
pub fn jones(d: &Diagram) -> Result<LaurentPolynomial, DiagramError> {
    jones_from_traversal(&d.visits, &d.signs())
}

pub(crate) fn jones_from_traversal(
    visits: &[Visit],
    signs: &[i8],
) -> Result<LaurentPolynomial, DiagramError> {
    let c = signs.len();
    if c > 24 {
        return Err(DiagramError::CrossingBudget { crossings: c });
    }
    let writhe: i64 = signs.iter().map(|&s| s as i64).sum();
    if c == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let pd = pd_from_traversal(visits, signs);
    let arcs = 2 * c;
    // delta = -A^2 - A^-2; powers up to the loop bound
    let delta = LaurentPolynomial::from_terms([(2, -1), (-2, -1)]);
    let mut delta_pow = vec![LaurentPolynomial::one()];
    for i in 1..=arcs {
        delta_pow.push(delta_pow[i - 1].mul(&delta));
    }
    // bracket = sum over states of A^(#A - #B) * delta^(loops - 1)
    let mut per_exponent_loops = vec![vec![0i64; arcs + 1]; 2 * c + 1];
    let mut parent = vec![0usize; arcs];
    for mask in 0u32..(1u32 << c) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut union = |parent: &mut [usize], a: usize, b: usize| {
            let ra = find(parent, a);
            let rb = find(parent, b);
            if ra != rb {
                parent[ra] = rb;
            }
        };
        for (ci, t) in pd.iter().enumerate() {
            if mask & (1 << ci) == 0 {
                // A-smoothing joins (a,b) and (c,d)
                union(&mut parent, t[0], t[1]);
                union(&mut parent, t[2], t[3]);
            } else {
                union(&mut parent, t[0], t[3]);
                union(&mut parent, t[1], t[2]);
            }
        }
        let mut loops = 0usize;
        for i in 0..arcs {
            if find(&mut parent, i) == i {
                loops += 1;
            }
        }
        let b_count = mask.count_ones() as i64;
        let a_count = c as i64 - b_count;
        let exp_index = (a_count - b_count + c as i64) as usize; // 0..=2c, step 2
        per_exponent_loops[exp_index][loops] += 1;
    }
    let mut bracket = LaurentPolynomial::zero();
    for (exp_index, by_loops) in per_exponent_loops.iter().enumerate() {
        let a_exp = exp_index as i64 - c as i64; // #A - #B
        for (loops, &count) in by_loops.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = delta_pow[loops - 1].scale(count).shift(a_exp);
            bracket = bracket.add(&term);
        }
    }
    // f = (-A^3)^(-w) * bracket, then t = A^(-4)
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let f = bracket.scale(sign).shift(-3 * writhe);
    let mut v = LaurentPolynomial::zero();
    for (e, coeff) in f.terms() {
        assert!(e % 4 == 0, "knot bracket exponents are multiples of 4");
        v.add_term(-e / 4, coeff);
    }
    Ok(v)
}

// ---- Alexander polynomial ----

/// Alexander polynomial from the crossing relations, as the determinant of
/// a `(c-1) × (c-1)` minor, normalized to symmetric Laurent form with
/// positive leading coefficient. The empty diagram gives 1.
pub fn alexander(d: &Diagram) -> LaurentPolynomial {
    alexander_from_traversal(&d.visits, &d.signs())
}

pub(crate) fn alexander_from_traversal(visits: &[Visit], signs: &[i8]) -> LaurentPolynomial {
    let c = signs.len();
    if c <= 1 {
        return LaurentPolynomial::one();
    }
    // arcs between consecutive underpasses; arc k starts at the k-th
    // under-visit (traversal order) and ends at the next one
    let under_positions: Vec<usize> = visits
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.over)
        .map(|(p, _)| p)
        .collect();
    debug_assert_eq!(under_positions.len(), c);
    let arc_of_position = |p: usize| -> usize {
        // the arc live at traversal position p: started by the latest
        // under-visit at or before p (cyclically)
        match under_positions.binary_search(&p) {
            Ok(k) => k,
            Err(0) => c - 1,
            Err(k) => k - 1,
        }
    };
    // rows: one relation per crossing over arc variables
    let one_minus_t = Polynomial::from_ints(&[1, -1]);
    let t = Polynomial::x();
    let minus_one = Polynomial::from_ints(&[-1]);
    let mut matrix = vec![vec![Polynomial::zero(); c]; c];
    let mut under_index = vec![usize::MAX; c];
    for (k, &p) in under_positions.iter().enumerate() {
        under_index[visits[p].crossing] = k;
    }
    let mut over_position = vec![usize::MAX; c];
    for (p, v) in visits.iter().enumerate() {
        if v.over {
            over_position[v.crossing] = p;
        }
    }
    for cr in 0..c {
        let m = under_index[cr];
        let incoming = (m + c - 1) % c;
        let outgoing = m;
        let over = arc_of_position(over_position[cr]);
        let (ci, cj) = if signs[cr] > 0 {
            (t.clone(), minus_one.clone())
        } else {
            (minus_one.clone(), t.clone())
        };
        matrix[cr][over] = &matrix[cr][over] + &one_minus_t;
        matrix[cr][incoming] = &matrix[cr][incoming] + &ci;
        matrix[cr][outgoing] = &matrix[cr][outgoing] + &cj;
    }
    // minor: drop the last row and column
    let n = c - 1;
    let minor: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| matrix[i][j].clone()).collect())
        .collect();
    let det = poly_matrix_det(&minor);
    normalize_alexander(&det)
}

/// Determinant of a small matrix of polynomials over ℚ, by evaluation and
/// interpolation.
fn poly_matrix_det(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    let bound: usize = m
        .iter()
        .map(|row| row.iter().map(|p| p.deg_or_0()).max().unwrap_or(0))
        .sum();
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut point = 2i64;
    while xs.len() <= bound {
        let x = rat_i(point);
        let vals: Vec<Vec<Rat>> = m
            .iter()
            .map(|row| row.iter().map(|p| p.eval(&x)).collect())
            .collect();
        ys.push(rat_matrix_det(vals));
        xs.push(x);
        point += 1;
    }
    crate::polycore::ring::newton_interpolate(&xs, &ys)
}

fn rat_matrix_det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::from_integer(1.into());
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero());
        let Some(p) = pivot else {
            return Rat::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det = det * &m[k][k];
        let inv = Rat::from_integer(1.into()) / &m[k][k];
        for i in k + 1..n {
            let factor = &m[i][k] * &inv;
            if factor.is_zero() {
                continue;
            }
            for j in k..n {
                let v = &m[i][j] - &(&m[k][j] * &factor);
                m[i][j] = v;
            }
        }
    }
    det
}

fn normalize_alexander(det: &Polynomial) -> LaurentPolynomial {
    assert!(!det.is_zero(), "Alexander determinant of a knot is nonzero");
    // strip t^k, then center the exponents and fix the sign
    let coeffs = det.coeffs();
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    let high = det.degree().unwrap();
    let span = high - low;
    assert!(span % 2 == 0, "knot Alexander polynomial has even span");
    let mid = (low + high) / 2;
    let mut out = LaurentPolynomial::zero();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        debug_assert!(c.denom() == &crate::rational::Int::from(1));
        let num = c.numer();
        let as_i64 = i64::try_from(num.clone()).expect("alexander coefficients fit i64");
        out.add_term(k as i64 - mid as i64, as_i64);
    }
    if out.coeff(out.max_exp().unwrap()) < 0 {
        out = out.scale(-1);
    }
    debug_assert!(out.is_palindromic(), "Alexander output must be symmetric");
    out
}

// ---- identification ----

/// Matches a diagram's invariant pair against the frozen type table.
pub fn identify(d: &Diagram) -> Result<Option<&'static KnotTypeRecord>, DiagramError> {
    let v = jones(d)?;
    let a = alexander(d);
    Ok(knot_types()
        .iter()
        .find(|r| r.jones_fingerprint == v && r.alexander_fingerprint == a))
}

/// Identification outcome with the evidence that produced it.
#[derive(Debug)]
pub struct Identification {
    pub record: Option<&'static KnotTypeRecord>,
    pub diagram: Diagram,
    pub axis_note: String,
    pub jones: LaurentPolynomial,
    pub alexander: LaurentPolynomial,
}

/// Builds a generic diagram (trying axes, then small rational rotations)
/// and identifies the knot type.
pub fn identify_knot(k: &PolynomialKnot) -> Result<Identification, DiagramError> {
    let report = embedcheck::verify_embedding(k)?;
    if !report.is_embedding {
        return Err(DiagramError::NotAnEmbedding);
    }
    let mut last_err: Option<DiagramError> = None;
    for axis in [Axis::Z, Axis::Y, Axis::X] {
        match build_diagram_with_report(k, axis, &report) {
            Ok(d) if d.crossing_count() <= 24 => {
                return finish_identification(d, format!("axis {axis:?}"));
            }
            Ok(d) => {
                last_err = Some(DiagramError::CrossingBudget {
                    crossings: d.crossing_count(),
                })
            }
            Err(e @ DiagramError::NonGenericAxis { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    // deterministic retry ladder: small rational rotations about each axis
    for (a, b, denom) in [(0, 1, 8), (1, 2, 8), (0, 2, 8), (0, 1, 16), (1, 2, 16), (0, 2, 16)] {
        let rotated = rotate_slightly(k, a, b, denom);
        match build_diagram_with_report(&rotated, Axis::Z, &report_for(&rotated)?) {
            Ok(d) if d.crossing_count() <= 24 => {
                return finish_identification(
                    d,
                    format!("axis Z after rotation in ({a},{b}) plane by 1/{denom}"),
                );
            }
            Ok(_) | Err(DiagramError::NonGenericAxis { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or(DiagramError::NonGenericAxis {
        axis: Axis::Z,
        reason: "no generic projection found".into(),
    }))
}

fn report_for(k: &PolynomialKnot) -> Result<EmbeddingReport, DiagramError> {
    Ok(embedcheck::verify_embedding(k)?)
}

fn finish_identification(d: Diagram, axis_note: String) -> Result<Identification, DiagramError> {
    let v = jones(&d)?;
    let a = alexander(&d);
    let record = knot_types()
        .iter()
        .find(|r| r.jones_fingerprint == v && r.alexander_fingerprint == a);
    Ok(Identification {
        record,
        diagram: d,
        axis_note,
        jones: v,
        alexander: a,
    })
}

/// Near-identity rotation in one coordinate plane, exact rational entries.
fn rotate_slightly(k: &PolynomialKnot, a: usize, b: usize, denom: i64) -> PolynomialKnot {
    let eps = rat_pq(1, denom);
    let comps: Vec<Polynomial> = (0..k.ambient_dimension())
        .map(|i| {
            if i == a {
                &k.component(a).clone() - &k.component(b).scale(&eps)
            } else if i == b {
                &k.component(b).clone() + &k.component(a).scale(&eps)
            } else {
                k.component(i).clone()
            }
        })
        .collect();
    PolynomialKnot::new(comps).expect("rotation preserves validity")
}

// ---- degree bounds ----

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("no crossing, bridge, or superbridge data known for `{0}`")]
pub struct NoBoundData(pub String);

/// Per-bound minimum degrees and their combined maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBound {
    pub minimum: usize,
    pub from_crossing: Option<usize>,
    pub from_bridge: Option<usize>,
    pub from_superbridge: Option<usize>,
}

/// Smallest degree compatible with the crossing bound `c ≤ (d-2)(d-3)/2`,
/// the bridge bound `b ≤ (d-1)/2`, and the superbridge bound
/// `s ≤ (d+1)/2`, using whichever fields are known.
pub fn degree_lower_bound(record: &KnotTypeRecord) -> Result<DegreeBound, NoBoundData> {
    let from_crossing = record.crossing_number.map(|c| {
        let mut d = 1usize;
        loop {
            let lhs = (d as i64 - 2) * (d as i64 - 3);
            if lhs >= 2 * c as i64 {
                return d;
            }
            d += 1;
        }
    });
    let from_bridge = record.bridge_number.map(|b| 2 * b as usize + 1);
    let from_superbridge = record.superbridge_number.map(|s| 2 * s as usize - 1);
    let minimum = [from_crossing, from_bridge, from_superbridge]
        .into_iter()
        .flatten()
        .max()
        .ok_or_else(|| NoBoundData(record.name.to_string()))?;
    Ok(DegreeBound {
        minimum,
        from_crossing,
        from_bridge,
        from_superbridge,
    })
}

/// Crossing-count ceilings for a knot's projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingBound {
    /// `⌊(d_x - 1)(d_y - 1) / 2⌋` for the (x, y) projection as given.
    pub projection: usize,
    /// `⌊(d - 2)(d - 3) / 2⌋`, the type-level bound after reductions.
    pub degree_type: usize,
}

pub fn max_crossings_bound(k: &PolynomialKnot) -> CrossingBound {
    let vd = k.vector_degree();
    let (dx, dy) = (vd[0], vd[1]);
    let d = k.degree();
    let projection = if dx == 0 || dy == 0 {
        0
    } else {
        (dx - 1) * (dy - 1) / 2
    };
    let degree_type = if d < 3 { 0 } else { (d - 2) * (d - 3) / 2 };
    CrossingBound {
        projection,
        degree_type,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knotmodel::{catalog_get, knot_type};

    fn standard_left_trefoil_traversal() -> (Vec<Visit>, Vec<i8>) {
        // Gauss sequence O1 U2 O3 U1 O2 U3, all crossings negative:
        // the standard first diagram of the left-handed trefoil.
        let visits = vec![
            Visit { crossing: 0, over: true },
            Visit { crossing: 1, over: false },
            Visit { crossing: 2, over: true },
            Visit { crossing: 0, over: false },
            Visit { crossing: 1, over: true },
            Visit { crossing: 2, over: false },
        ];
        (visits, vec![-1, -1, -1])
    }

    #[test]
    fn jones_of_standard_trefoil_matches_hand_state_sum() {
        // Oracle fixed by expanding the eight Kauffman states by hand:
        // loop counts 3,2,2,2,1,1,1,2 give bracket A^7 - A^3 - A^-5, and
        // writhe -3 normalization lands on -t^-4 + t^-3 + t^-1.
        let (visits, signs) = standard_left_trefoil_traversal();
        let v = jones_from_traversal(&visits, &signs).unwrap();
        assert_eq!(
            v,
            LaurentPolynomial::from_terms([(-4, -1), (-3, 1), (-1, 1)])
        );
        // mirror: all crossings flipped to positive reverses exponents
        let flipped: Vec<Visit> = visits
            .iter()
            .map(|t| Visit { crossing: t.crossing, over: !t.over })
            .collect();
        let v2 = jones_from_traversal(&flipped, &[1, 1, 1]).unwrap();
        assert_eq!(v2, v.reversed());
    }

    #[test]
    fn alexander_of_standard_trefoil() {
        // cofactor oracle: deleting row/col 3 leaves a 2x2 minor whose
        // determinant is t^2 - t + 1 up to units
        let (visits, signs) = standard_left_trefoil_traversal();
        let a = alexander_from_traversal(&visits, &signs);
        assert_eq!(a, LaurentPolynomial::from_terms([(-1, 1), (0, -1), (1, 1)]));
    }

    #[test]
    fn empty_diagram_invariants() {
        assert_eq!(jones_from_traversal(&[], &[]).unwrap(), LaurentPolynomial::one());
        assert_eq!(alexander_from_traversal(&[], &[]), LaurentPolynomial::one());
    }

    #[test]
    fn shastri_trefoil_diagram() {
        let k = &catalog_get("shastri-trefoil").unwrap().knot;
        let d = build_diagram(k, Axis::Z).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe.abs(), 3);
        assert!(d.is_valid_double_occurrence());
        let v = jones(&d).unwrap();
        assert_eq!(v.num_terms(), 3);
        let a = alexander(&d);
        assert_eq!(a, LaurentPolynomial::from_terms([(-1, 1), (0, -1), (1, 1)]));
        println!(
            "shastri z-diagram: writhe {} gauss {} jones {} alexander {}",
            d.writhe,
            d.gauss_code(),
            v.display("t"),
            a.display("t")
        );
    }

    #[test]
    fn unknot_diagram_is_empty() {
        let k = &catalog_get("unknot").unwrap().knot;
        let d = build_diagram(k, Axis::Z).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(jones(&d).unwrap(), LaurentPolynomial::one());
        assert_eq!(alexander(&d), LaurentPolynomial::one());
    }

    #[test]
    fn degree_bound_examples() {
        let trefoil = knot_type("3_1").unwrap();
        let b = degree_lower_bound(trefoil).unwrap();
        assert_eq!(b.minimum, 5);
        assert_eq!(b.from_crossing, Some(5));
        assert_eq!(b.from_bridge, Some(5));
        assert_eq!(b.from_superbridge, Some(5));

        let five_one = knot_type("5_1").unwrap();
        let b = degree_lower_bound(five_one).unwrap();
        assert_eq!(b.minimum, 7);
        assert_eq!(b.from_superbridge, Some(7));
        assert_eq!(b.from_crossing, Some(6));

        let torus34 = knot_type("8_19").unwrap();
        let b = degree_lower_bound(torus34).unwrap();
        assert_eq!(b.minimum, 7);
        assert_eq!(b.from_bridge, Some(7));

        let fig8 = knot_type("4_1").unwrap();
        assert_eq!(degree_lower_bound(fig8).unwrap().minimum, 6);
    }

    #[test]
    fn crossing_bounds_match_formulas() {
        let k = PolynomialKnot::from_ints(&[&[0, -3, 0, 1], &[0, 0, -4, 0, 1], &[0, -10, 0, 0, 0, 1]]);
        let b = max_crossings_bound(&k);
        assert_eq!(b.projection, 3); // (3,4): (2)(3)/2
        assert_eq!(b.degree_type, 3); // d=5: (3)(2)/2
        let k6 = PolynomialKnot::from_ints(&[&[0, 1], &[0, 0, 1], &[0, 0, 0, 0, 0, 0, 1]]);
        assert_eq!(max_crossings_bound(&k6).degree_type, 6); // d=6: (4)(3)/2
    }
}
