//! Exact computation with polynomial knots: smooth embeddings ℝ → ℝⁿ whose
//! components are polynomials with rational coefficients.
//!
//! The crate keeps every certificate-bearing computation in exact rational
//! arithmetic: embedding verification (no critical points, no double points),
//! canonical-form reductions, planar diagram extraction with Jones and
//! Alexander invariants, degree bounds, geometry at infinity, approximation
//! of smooth curves by polynomial embeddings, path-equivalence certification,
//! and Gröbner-basis surjectivity certificates for complex embeddings.

pub mod rational;

pub mod embedcheck;

pub mod diagram;
pub mod knotmodel;
pub mod polycore;

pub use rational::{Int, Rat};
