//! Invariants of isolated hypersurface singularities and the A-D-E classifier.

mod classify;
mod corpus;
mod muconst;
mod newton;
mod spectrum;

use thiserror::Error;

use crate::grobner::{local_algebra, GrobnerError, LocalAlgebra};
use crate::poly::{
    default_var_names, find_quasihomogeneous_weights, parse_polynomial, parse_with_inferred_vars,
    ParseError, PolyError, Polynomial, Weights,
};
use crate::weyl::RootSystemType;
use crate::Rational;

pub use classify::{
    classify_ade, strip_suspension_variables, three_variable_spectrum, ClassificationResult,
};
pub use corpus::{
    corpus_report, germ_report, parse_corpus, CheckResult, CorpusEntry, CorpusLineError,
    CorpusReport, GermReport,
};
pub use muconst::{mu_const_linear_check, MuConstReport, MuConstSample};
pub use newton::{newton_diagram_2d, newton_number_2d, NewtonDiagram2D};
pub use spectrum::{
    is_simple, milnor_number_from_weights, modality_quasihomogeneous, monodromy_eigenvalue_angles,
    monodromy_order, signature_from_spectrum, spectrum_length, spectrum_quasihomogeneous,
    suspend_spectrum, weighted_basis, Signature, Spectrum,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularityError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Grobner(#[from] GrobnerError),
    #[error("no quasihomogeneous weight system")]
    NoWeights,
    #[error("not simple: spectrum length {length} is not less than 1")]
    NotSimple { length: Rational },
    #[error("Hessian corank {corank} exceeds 2")]
    CorankTooLarge { corank: usize },
    #[error("core after removing squares has {nvars} variables, at most 2 supported")]
    CoreTooLarge { nvars: usize },
    #[error("no A-D-E type matches h = {h}, exponents {exponents:?}")]
    NoTableMatch { h: u64, exponents: Vec<u64> },
    #[error("empty spectrum")]
    EmptySpectrum,
    #[error("expected {expected} variables, got {got}")]
    WrongVariableCount { expected: usize, got: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("Newton diagram is not convenient")]
    NotConvenient,
}

/// A germ `f: (C^n, 0) → (C, 0)` with an isolated critical point at the origin.
#[derive(Clone, Debug)]
pub struct Germ {
    poly: Polynomial,
    names: Vec<String>,
    weights: Option<Weights>,
    local: LocalAlgebra,
}

impl Germ {
    /// Rejects constant and linear terms and non-isolated critical points.
    pub fn new(poly: Polynomial) -> Result<Self, SingularityError> {
        let names = default_var_names(poly.nvars());
        Self::with_names(poly, names)
    }

    pub fn with_names(poly: Polynomial, names: Vec<String>) -> Result<Self, SingularityError> {
        if poly.terms().any(|(m, _)| m.degree() <= 1) {
            return Err(PolyError::HasLowOrderTerms.into());
        }
        let local = local_algebra(&poly)?;
        let weights = find_quasihomogeneous_weights(&poly);
        Ok(Self {
            poly,
            names,
            weights,
            local,
        })
    }

    /// Parses with variables inferred alphabetically from the text.
    pub fn parse(text: &str) -> Result<Self, SingularityError> {
        let (poly, names) = parse_with_inferred_vars(text)?;
        Self::with_names(poly, names)
    }

    pub fn parse_in(text: &str, vars: &[&str]) -> Result<Self, SingularityError> {
        let poly = parse_polynomial(text, vars)?;
        Self::with_names(poly, vars.iter().map(|s| s.to_string()).collect())
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn weights(&self) -> Option<&Weights> {
        self.weights.as_ref()
    }

    pub fn require_weights(&self) -> Result<&Weights, SingularityError> {
        self.weights.as_ref().ok_or(SingularityError::NoWeights)
    }

    pub fn local_algebra(&self) -> &LocalAlgebra {
        &self.local
    }

    pub fn milnor_number(&self) -> usize {
        self.local.dimension()
    }

    pub fn display(&self) -> String {
        self.poly.to_string_with(&self.names)
    }
}

/// Rank-`μ` types whose Coxeter data could match a germ of Milnor number `μ`.
pub(crate) fn candidate_types(mu: usize) -> Vec<RootSystemType> {
    RootSystemType::all_of_rank(mu)
}
