//! Exact invariants of isolated quasihomogeneous hypersurface singularities
//! and the ADE root-system side they are matched against.
//!
//! - [`poly`]: rational polynomials, parsing, weights.
//! - [`grobner`]: Buchberger completion, normal forms, quotient bases, Milnor numbers.
//! - [`singularity`]: spectra, modality, Newton diagrams, the ADE classifier, corpus reports.
//! - [`weyl`]: root systems, Weyl groups, Coxeter elements, definiteness.
//! - [`braid`]: Picard–Lefschetz transvections, Hurwitz action, verification harnesses.

pub mod braid;
pub mod grobner;
pub mod linalg;
pub mod poly;
pub mod singularity;
pub mod weyl;

/// Arbitrary-precision rational number used throughout.
pub type Rational = num_rational::BigRational;
