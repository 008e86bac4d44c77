//! The polynomial knot data model, its coefficient matrix, and the embedded
//! catalog of example knots with their topological type records.

use crate::diagram::LaurentPolynomial;
use crate::polycore::Polynomial;
use crate::rational::{parse_rat, rat_i, rat_to_string, Rat};
use num_traits::{One, Zero};
use std::fmt;
use std::sync::OnceLock;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum KnotError {
    #[error("a polynomial knot needs at least two components, got {0}")]
    TooFewComponents(usize),
    #[error("all components are constant")]
    AllConstant,
    #[error("unknown catalog entry `{name}`; available: {available}")]
    UnknownCatalogEntry { name: String, available: String },
    #[error("nonzero constant term in component {component}; apply translate_to_origin first")]
    NonzeroConstantTerm { component: usize },
    #[error("invalid .pknot input: {0}")]
    Format(String),
}

/// A polynomial map ℝ → ℝⁿ, `n ≥ 2`, with at least one nonconstant
/// component. Embedding status is a theorem to verify, never an assumption.
#[derive(Clone, PartialEq, Eq)]
pub struct PolynomialKnot {
    components: Vec<Polynomial>,
}

impl PolynomialKnot {
    pub fn new(components: Vec<Polynomial>) -> Result<Self, KnotError> {
        if components.len() < 2 {
            return Err(KnotError::TooFewComponents(components.len()));
        }
        if components.iter().all(|c| c.is_constant()) {
            return Err(KnotError::AllConstant);
        }
        Ok(PolynomialKnot { components })
    }

    pub fn from_ints(components: &[&[i64]]) -> Self {
        PolynomialKnot::new(components.iter().map(|c| Polynomial::from_ints(c)).collect())
            .expect("valid literal knot")
    }

    pub fn ambient_dimension(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    /// Maximum component degree.
    pub fn degree(&self) -> usize {
        self.components.iter().map(|c| c.deg_or_0()).max().unwrap()
    }

    /// Per-component degrees; constant components report 0.
    pub fn vector_degree(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.deg_or_0()).collect()
    }

    /// Coefficient vector of `t^k` across components.
    pub fn coefficient_vector(&self, k: usize) -> Vec<Rat> {
        self.components.iter().map(|c| c.coeff(k)).collect()
    }

    /// Leading coefficient vector `a_d` at the knot degree.
    pub fn leading_vector(&self) -> Vec<Rat> {
        self.coefficient_vector(self.degree())
    }

    pub fn eval_f64(&self, t: f64) -> Vec<f64> {
        self.components.iter().map(|c| c.eval_f64(t)).collect()
    }

    pub fn eval(&self, t: &Rat) -> Vec<Rat> {
        self.components.iter().map(|c| c.eval(t)).collect()
    }

    pub fn derivative(&self) -> Vec<Polynomial> {
        self.components.iter().map(|c| c.derivative()).collect()
    }

    pub fn map_components(&self, f: impl FnMut(&Polynomial) -> Polynomial) -> PolynomialKnot {
        PolynomialKnot {
            components: self.components.iter().map(f).collect(),
        }
    }

    /// Keeps components `i` and `j` as a planar map.
    pub fn project(&self, i: usize, j: usize) -> PolynomialKnot {
        PolynomialKnot {
            components: vec![self.components[i].clone(), self.components[j].clone()],
        }
    }
}

impl fmt::Debug for PolynomialKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c.display("t"))?;
        }
        write!(f, ")")
    }
}

/// The `n × d` matrix `A = [a_d a_{d-1} … a_1]` of a knot with zero
/// constant terms; column `j` holds the coefficient vector of `t^(d-j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientMatrix {
    pub rows: usize,
    pub degree: usize,
    entries: Vec<Vec<Rat>>, // entries[i][j] = coeff of t^(degree - j) in component i
}

impl CoefficientMatrix {
    pub fn entry(&self, row: usize, col: usize) -> &Rat {
        &self.entries[row][col]
    }

    pub fn row(&self, row: usize) -> &[Rat] {
        &self.entries[row]
    }

    /// Reconstructs the knot; exact round-trip with `coefficient_matrix`.
    pub fn to_knot(&self) -> PolynomialKnot {
        let components = self
            .entries
            .iter()
            .map(|row| {
                let mut coeffs = vec![Rat::zero(); self.degree + 1];
                for (j, c) in row.iter().enumerate() {
                    coeffs[self.degree - j] = c.clone();
                }
                Polynomial::from_coeffs(coeffs)
            })
            .collect();
        PolynomialKnot { components }
    }

    pub(crate) fn from_rows(entries: Vec<Vec<Rat>>, degree: usize) -> Self {
        CoefficientMatrix {
            rows: entries.len(),
            degree,
            entries,
        }
    }
}

/// Coefficient matrix of a knot whose constant terms are all zero.
pub fn coefficient_matrix(k: &PolynomialKnot) -> Result<CoefficientMatrix, KnotError> {
    for (i, c) in k.components().iter().enumerate() {
        if !c.constant_term().is_zero() {
            return Err(KnotError::NonzeroConstantTerm { component: i });
        }
    }
    let d = k.degree();
    let entries = k
        .components()
        .iter()
        .map(|c| (1..=d).rev().map(|p| c.coeff(p)).collect())
        .collect();
    Ok(CoefficientMatrix::from_rows(entries, d))
}

/// Provenance for numeric knot-type data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Stated or directly forced in the source text.
    PaperCited,
    /// Standard knot tables / naming conventions.
    ExternalTable,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    /// The chirality of the catalog representative.
    Reference,
    /// Mirror of the catalog representative.
    Mirror,
    Amphichiral,
}

/// A named topological knot type with invariant fingerprints.
///
/// Fingerprints are generated once by this crate's own diagram pipeline on
/// the catalog equations and frozen here; `fingerprints_regenerate` in the
/// test suite re-derives them from scratch.
#[derive(Clone, Debug)]
pub struct KnotTypeRecord {
    pub name: &'static str,
    pub chirality: Chirality,
    pub crossing_number: Option<u32>,
    pub crossing_provenance: Provenance,
    pub bridge_number: Option<u32>,
    pub bridge_provenance: Provenance,
    pub superbridge_number: Option<u32>,
    pub superbridge_provenance: Provenance,
    pub alexander_fingerprint: LaurentPolynomial,
    pub jones_fingerprint: LaurentPolynomial,
}

/// One curated example knot.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub source: &'static str,
    pub knot: PolynomialKnot,
    pub expected_type: &'static str,
    pub expected_vector_degree: Vec<usize>,
}

fn poly(coeffs: &[&str]) -> Polynomial {
    // ascending powers, exact literals
    Polynomial::from_coeffs(coeffs.iter().map(|s| parse_rat(s).unwrap()).collect())
}

fn poly_product(factors: &[&[&str]]) -> Polynomial {
    let mut p = Polynomial::one();
    for f in factors {
        p = &p * &poly(f);
    }
    p
}

fn knot(components: Vec<Polynomial>) -> PolynomialKnot {
    PolynomialKnot::new(components).expect("catalog knot is well formed")
}

fn build_catalog() -> Vec<CatalogEntry> {
    let mut entries = Vec::new();

    // The unknot can be represented in every degree; this low-degree
    // embedding keeps diagrams trivial.
    entries.push(CatalogEntry {
        name: "unknot",
        source: "standard",
        knot: PolynomialKnot::from_ints(&[&[0, 1], &[0, 0, 1], &[0, 0, 0, 1]]),
        expected_type: "unknot",
        expected_vector_degree: vec![1, 2, 3],
    });

    entries.push(CatalogEntry {
        name: "shastri-trefoil",
        source: "Shastri",
        knot: PolynomialKnot::from_ints(&[
            &[0, -3, 0, 1],
            &[0, 0, -4, 0, 1],
            &[0, -10, 0, 0, 0, 1],
        ]),
        expected_type: "3_1",
        expected_vector_degree: vec![3, 4, 5],
    });

    entries.push(CatalogEntry {
        name: "shastri-figure-eight",
        source: "Shastri",
        knot: PolynomialKnot::from_ints(&[
            &[0, -3, 0, 1],
            &[0, 4, 0, -5, 0, 1], // t(t^2-1)(t^2-4)
            &[0, -42, 0, 0, 0, 0, 0, 1],
        ]),
        expected_type: "4_1",
        expected_vector_degree: vec![3, 5, 7],
    });

    entries.push(CatalogEntry {
        name: "brown-figure-eight",
        source: "Brown",
        knot: PolynomialKnot::from_ints(&[
            &[0, -5, 0, 1],
            &[0, -28, 0, 0, 0, 1],
            &[0, 0, 0, -32, 0, 0, 0, 1],
        ]),
        expected_type: "4_1",
        expected_vector_degree: vec![3, 5, 7],
    });

    entries.push(CatalogEntry {
        name: "mcferon-figure-eight",
        source: "McFeron",
        knot: knot(vec![
            poly(&["0.35140383", "-8.63068748", "5", "2.279283653", "-1"]),
            poly(&["0", "4", "0", "-5", "0", "1"]),
            poly_product(&[
                &["2.06", "1"],
                &["1.916737670", "1"],
                &["0.2122155248", "1"],
                &["-1.379221313", "1"],
                &["-2.05", "1"],
                &["10", "1"],
            ]),
        ]),
        expected_type: "4_1",
        expected_vector_degree: vec![4, 5, 6],
    });

    entries.push(CatalogEntry {
        name: "auerbach-5_1",
        source: "Auerbach",
        knot: knot(vec![
            poly_product(&[&["4", "5", "1"], &["10", "-7", "1"]]),
            poly_product(&[&["0", "-5.2", "1"], &["-9", "0", "1"], &["4.7", "1"]]),
            poly(&[
                "321.285", "-331.888", "-364.064", "176.691", "83.4739", "-25.8835", "-3.90763",
                "1",
            ]),
        ]),
        expected_type: "5_1",
        expected_vector_degree: vec![4, 5, 7],
    });

    entries.push(CatalogEntry {
        name: "reu1998-5_1",
        source: "REU 1998",
        knot: knot(vec![
            poly(&["0", "44100000", "0", "-541000", "0", "1000"]),
            poly(&["-792985600", "0", "17126400", "0", "-80400", "0", "100"]),
            poly(&["0", "-9363600", "0", "783769/4", "0", "-13433/16", "0", "1"]),
        ]),
        expected_type: "5_1",
        expected_vector_degree: vec![5, 6, 7],
    });

    entries.push(CatalogEntry {
        name: "brown-5_1",
        source: "Brown",
        knot: PolynomialKnot::from_ints(&[
            &[0, 0, -24, 0, 1],
            &[0, 260, 0, -36, 0, 1],
            &[0, 560, 0, 168, 0, -31, 0, 1],
        ]),
        expected_type: "5_1",
        expected_vector_degree: vec![4, 5, 7],
    });

    entries.push(CatalogEntry {
        name: "reu2006-5_2",
        source: "REU 2006",
        knot: knot(vec![
            poly(&["0", "0", "-12", "0", "1"]),
            poly(&["0", "44", "0", "-15", "0", "1"]), // t(t^2-4)(t^2-11)
            poly_product(&[
                &["-0.5", "1"],
                &["-10", "1"],
                &["-12.5", "1"],
                &["-20", "1"],
                &["-28", "1"],
                &["-29", "1"],
                &["-40", "1"],
                &["-50.2", "1"],
                &["-50.6", "1"],
            ]),
        ]),
        expected_type: "5_2",
        expected_vector_degree: vec![4, 5, 9],
    });

    entries.push(CatalogEntry {
        name: "reu2006-6_1",
        source: "REU 2006",
        knot: knot(vec![
            poly_product(&[&["-0.5", "0", "1"], &["-15.3", "0", "1"]]),
            poly_product(&[&["0", "1"], &["-16", "0", "1"], &["-7", "0", "1"], &["-4.5", "0", "1"]]),
            poly_product(&[
                &["0", "1"],
                &["-15.2", "0", "1"],
                &["-9", "0", "1"],
                &["-6.25", "0", "1"],
                &["-1", "0", "1"],
                &["-0.25", "0", "1"],
            ]),
        ]),
        expected_type: "6_1",
        expected_vector_degree: vec![4, 7, 11],
    });

    entries.push(CatalogEntry {
        name: "brown-6_2",
        source: "Brown",
        knot: knot(vec![
            poly(&["0", "0", "-12", "0", "1"]),
            poly(&["0", "44", "0", "-15", "0", "1"]),
            poly_product(&[
                &["0", "1"],
                &["-1", "0", "1"],
                &["-9", "0", "1"],
                &["-49/16", "0", "1"],
                &["-169/16", "0", "1"],
                &["-100/9", "0", "1"],
            ]),
        ]),
        expected_type: "6_2",
        expected_vector_degree: vec![4, 5, 11],
    });

    entries.push(CatalogEntry {
        name: "curry-6_3",
        source: "Curry, REU 1998",
        knot: knot(vec![
            poly(&["0", "-100", "0", "1"]),
            poly_product(&[
                &["0", "1"],
                &["4", "1"],
                &["-6", "1"],
                &["-8", "1"],
                &["-9", "1"],
                &["9", "1"],
                &["-11", "1"],
                &["11", "1"],
            ]),
            poly_product(&[
                &["1", "1"],
                &["-4", "0", "1"],
                &["-6", "1"],
                &["7", "1"],
                &["9.2", "1"],
                &["-9.5", "1"],
                &["10", "1"],
                &["-10.5", "1"],
                &["11.5", "1"],
            ]),
        ]),
        expected_type: "6_3",
        expected_vector_degree: vec![3, 8, 10],
    });

    entries.push(CatalogEntry {
        name: "curry-8_19",
        source: "Curry, REU 1998",
        knot: knot(vec![
            poly_product(&[
                &["0", "1"],
                &["-144", "0", "1"],
                &["-784", "0", "1"],
                &["-900", "0", "1"],
            ]),
            poly_product(&[&["-36", "0", "1"], &["-529", "0", "1"], &["-841", "0", "1"]]),
            poly_product(&[
                &["0", "-1"],
                &["-64", "0", "1"],
                &["-148.84", "0", "1"],
                &["-841", "0", "1"],
            ]),
        ]),
        expected_type: "8_19",
        expected_vector_degree: vec![7, 6, 7],
    });

    entries
}

static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();

pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG.get_or_init(build_catalog)
}

pub fn catalog_names() -> Vec<&'static str> {
    catalog().iter().map(|e| e.name).collect()
}

pub fn catalog_get(name: &str) -> Result<&'static CatalogEntry, KnotError> {
    catalog()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| KnotError::UnknownCatalogEntry {
            name: name.to_string(),
            available: catalog_names().join(", "),
        })
}

fn laurent(terms: &[(i64, i64)]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(terms.iter().map(|&(e, c)| (e, c)))
}

/// Frozen fingerprint table. Chirality labels are anchored by the statement
/// that the Shastri trefoil is right-handed; every other chiral type's
/// `Reference` chirality is the chirality of its catalog representative.
fn build_types() -> Vec<KnotTypeRecord> {
    use Chirality::*;
    use Provenance::*;
    let mut v = Vec::new();
    let mut push = |name: &'static str,
                    chirality: Chirality,
                    c: Option<u32>,
                    cp: Provenance,
                    b: Option<u32>,
                    bp: Provenance,
                    s: Option<u32>,
                    sp: Provenance,
                    alex: &[(i64, i64)],
                    jones: &[(i64, i64)]| {
        v.push(KnotTypeRecord {
            name,
            chirality,
            crossing_number: c,
            crossing_provenance: cp,
            bridge_number: b,
            bridge_provenance: bp,
            superbridge_number: s,
            superbridge_provenance: sp,
            alexander_fingerprint: laurent(alex),
            jones_fingerprint: laurent(jones),
        });
    };

    // Bridge and superbridge numbers appear only where the cited
    // Schubert/Kuiper results pin them: the torus knots (2,3), (2,5), (3,4).
    push(
        "unknot",
        Amphichiral,
        Some(0),
        ExternalTable,
        None,
        Unknown,
        None,
        Unknown,
        &[(0, 1)],
        &[(0, 1)],
    );
    push(
        "3_1",
        Reference,
        Some(3),
        ExternalTable,
        Some(2),
        PaperCited,
        Some(3),
        PaperCited,
        &[(-1, 1), (0, -1), (1, 1)],
        &[(1, 1), (3, 1), (4, -1)],
    );
    push(
        "4_1",
        Amphichiral,
        Some(4),
        ExternalTable,
        None,
        Unknown,
        None,
        Unknown,
        &[(-1, 1), (0, -3), (1, 1)],
        &[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)],
    );
    push(
        "5_1",
        Reference,
        Some(5),
        ExternalTable,
        Some(2),
        PaperCited,
        Some(4),
        PaperCited,
        &[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)],
        &[(2, 1), (4, 1), (5, -1), (6, 1), (7, -1)],
    );
    push(
        "5_2",
        Reference,
        Some(5),
        ExternalTable,
        None,
        Unknown,
        None,
        Unknown,
        &[(-1, 2), (0, -3), (1, 2)],
        &[(1, 1), (2, -1), (3, 2), (4, -1), (5, 1), (6, -1)],
    );
    push(
        "6_1",
        Reference,
        Some(6),
        ExternalTable,
        None,
        Unknown,
        None,
        Unknown,
        &[(-1, 2), (0, -5), (1, 2)],
        &[(-4, 1), (-3, -1), (-2, 1), (-1, -2), (0, 2), (1, -1), (2, 1)],
    );
    push(
        "6_2",
        Reference,
        Some(6),
        ExternalTable,
        None,
        Unknown,
        None,
        Unknown,
        &[(-2, 1), (-1, -3), (0, 3), (1, -3), (2, 1)],
        &[(-5, 1), (-4, -2), (-3, 2), (-2, -2), (-1, 2), (0, -1), (1, 1)],
    );
    push(
        "6_3",
        Amphichiral,
        Some(6),
        ExternalTable,
        None,
        Unknown,
        None,
        Unknown,
        &[(-2, 1), (-1, -3), (0, 5), (1, -3), (2, 1)],
        &[(-3, -1), (-2, 2), (-1, -2), (0, 3), (1, -2), (2, 2), (3, -1)],
    );
    push(
        "8_19",
        Reference,
        Some(8),
        ExternalTable,
        Some(3),
        PaperCited,
        Some(4),
        PaperCited,
        &[(-3, 1), (-2, -1), (0, 1), (2, -1), (3, 1)],
        &[(3, 1), (5, 1), (8, -1)],
    );

    // Mirror records for the chiral types: Jones exponents negate, the
    // Alexander polynomial and numeric data are shared.
    let chiral: Vec<KnotTypeRecord> = v
        .iter()
        .filter(|r| r.chirality == Reference)
        .cloned()
        .collect();
    for r in chiral {
        v.push(KnotTypeRecord {
            name: mirror_name(r.name),
            chirality: Mirror,
            jones_fingerprint: r.jones_fingerprint.reversed(),
            ..r
        });
    }
    v
}

fn mirror_name(name: &str) -> &'static str {
    match name {
        "3_1" => "3_1-mirror",
        "5_1" => "5_1-mirror",
        "5_2" => "5_2-mirror",
        "6_1" => "6_1-mirror",
        "6_2" => "6_2-mirror",
        "8_19" => "8_19-mirror",
        other => panic!("no mirror record for {other}"),
    }
}

static TYPES: OnceLock<Vec<KnotTypeRecord>> = OnceLock::new();

pub fn knot_types() -> &'static [KnotTypeRecord] {
    TYPES.get_or_init(build_types)
}

pub fn knot_type(name: &str) -> Option<&'static KnotTypeRecord> {
    knot_types().iter().find(|r| r.name == name)
}

// ---- .pknot file format ----

/// Serializes a knot in the line-oriented `.pknot` format: a `pknot 1`
/// header, `n <dimension>`, then one `coeffs <c_d> … <c_0>` line per
/// component, highest degree first.
pub fn write_pknot(k: &PolynomialKnot) -> String {
    let mut out = String::from("pknot 1\n");
    out.push_str(&format!("n {}\n", k.ambient_dimension()));
    for c in k.components() {
        out.push_str("coeffs");
        let d = c.deg_or_0();
        for p in (0..=d).rev() {
            out.push(' ');
            out.push_str(&rat_to_string(&c.coeff(p)));
        }
        out.push('\n');
    }
    out
}

/// Parses the `.pknot` format; accepts integer, `p/q`, and decimal
/// coefficient literals, all converted exactly.
pub fn parse_pknot(text: &str) -> Result<PolynomialKnot, KnotError> {
    let fail = |msg: &str| KnotError::Format(msg.to_string());
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| fail("empty input"))?;
    if header != "pknot 1" {
        return Err(fail(&format!("expected `pknot 1` header, got `{header}`")));
    }
    let dim_line = lines.next().ok_or_else(|| fail("missing dimension line"))?;
    let n: usize = dim_line
        .strip_prefix("n ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| fail("dimension line must be `n <count>`"))?;
    let mut components = Vec::with_capacity(n);
    for line in lines {
        let rest = line
            .strip_prefix("coeffs")
            .ok_or_else(|| fail(&format!("expected `coeffs …`, got `{line}`")))?;
        let mut descending = Vec::new();
        for tok in rest.split_whitespace() {
            descending.push(parse_rat(tok).map_err(|e| fail(&e.to_string()))?);
        }
        if descending.is_empty() {
            return Err(fail("empty coefficient list"));
        }
        descending.reverse();
        components.push(Polynomial::from_coeffs(descending));
    }
    if components.len() != n {
        return Err(fail(&format!(
            "expected {n} components, got {}",
            components.len()
        )));
    }
    PolynomialKnot::new(components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_pq;

    #[test]
    fn vector_degrees_match_sources() {
        assert_eq!(
            catalog_get("shastri-trefoil").unwrap().knot.vector_degree(),
            vec![3, 4, 5]
        );
        assert_eq!(
            catalog_get("brown-6_2").unwrap().knot.vector_degree(),
            vec![4, 5, 11]
        );
        assert_eq!(
            catalog_get("reu2006-5_2").unwrap().knot.vector_degree(),
            vec![4, 5, 9]
        );
        assert_eq!(
            catalog_get("curry-8_19").unwrap().knot.vector_degree(),
            vec![7, 6, 7]
        );
        for e in catalog() {
            assert_eq!(
                e.knot.vector_degree(),
                e.expected_vector_degree,
                "{}",
                e.name
            );
        }
    }

    #[test]
    fn constant_component_has_degree_zero() {
        let k = PolynomialKnot::from_ints(&[&[0, 1], &[7], &[7]]);
        assert_eq!(k.vector_degree(), vec![1, 0, 0]);
    }

    #[test]
    fn unknown_catalog_name_lists_available() {
        let err = catalog_get("nope").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("shastri-trefoil"));
        assert!(msg.contains("curry-8_19"));
    }

    #[test]
    fn decimal_coefficients_are_exact() {
        let k = &catalog_get("mcferon-figure-eight").unwrap().knot;
        assert_eq!(k.component(0).coeff(3), rat_pq(2_279_283_653, 1_000_000_000));
        assert_eq!(k.component(0).coeff(0), rat_pq(35_140_383, 100_000_000));
        // z expands from its printed factors with an exact 10 root
        assert_eq!(
            k.component(2).eval(&rat_i(-10)),
            crate::rational::rat_i(0)
        );
    }

    use crate::rational::rat_i;

    #[test]
    fn coefficient_matrix_round_trip() {
        let k = &catalog_get("shastri-trefoil").unwrap().knot;
        let m = coefficient_matrix(k).unwrap();
        assert_eq!(m.rows, 3);
        assert_eq!(m.degree, 5);
        // rows over columns t^5..t
        assert_eq!(m.row(0), &[rat_i(0), rat_i(0), rat_i(1), rat_i(0), rat_i(-3)]);
        assert_eq!(m.row(1), &[rat_i(0), rat_i(1), rat_i(0), rat_i(-4), rat_i(0)]);
        assert_eq!(m.row(2), &[rat_i(1), rat_i(0), rat_i(0), rat_i(0), rat_i(-10)]);
        assert_eq!(&m.to_knot(), k);

        let line = PolynomialKnot::from_ints(&[&[0, 1], &[0], &[0]]);
        let lm = coefficient_matrix(&line).unwrap();
        assert_eq!(lm.row(0), &[rat_i(1)]);
        assert_eq!(lm.row(1), &[rat_i(0)]);

        let shifted = PolynomialKnot::from_ints(&[&[1, 1], &[0, 0, 1]]);
        assert_eq!(
            coefficient_matrix(&shifted).unwrap_err(),
            KnotError::NonzeroConstantTerm { component: 0 }
        );
    }

    #[test]
    fn pknot_round_trip() {
        for e in catalog() {
            let text = write_pknot(&e.knot);
            let back = parse_pknot(&text).unwrap();
            assert_eq!(back, e.knot, "{}", e.name);
        }
        let parsed = parse_pknot("pknot 1\nn 2\ncoeffs 1 0.5 -3/2\ncoeffs 1 0\n").unwrap();
        assert_eq!(parsed.component(0).coeff(1), rat_pq(1, 2));
        assert_eq!(parsed.component(0).coeff(0), rat_pq(-3, 2));
        assert!(parse_pknot("pknot 2\nn 2\n").is_err());
        assert!(parse_pknot("pknot 1\nn 3\ncoeffs 1 0\n").is_err());
    }

    #[test]
    fn type_table_is_complete_for_catalog() {
        for e in catalog() {
            assert!(
                knot_type(e.expected_type).is_some(),
                "missing type record {}",
                e.expected_type
            );
        }
        for r in knot_types() {
            assert!(!r.alexander_fingerprint.is_zero(), "{}", r.name);
            assert!(!r.jones_fingerprint.is_zero(), "{}", r.name);
        }
        // mirror records reverse jones and share alexander
        let t = knot_type("3_1").unwrap();
        let m = knot_type("3_1-mirror").unwrap();
        assert_eq!(m.jones_fingerprint, t.jones_fingerprint.reversed());
        assert_eq!(m.alexander_fingerprint, t.alexander_fingerprint);
    }
}
