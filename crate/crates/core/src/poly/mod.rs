//! Exact multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is a sparse map from [`Monomial`] exponent vectors to
//! nonzero rational coefficients, kept in graded lexicographic order so that
//! printing is deterministic. Text input goes through [`parse_polynomial`].

mod monomial;
mod parse;
mod polynomial;
mod weights;

pub use monomial::Monomial;
pub use parse::{parse_polynomial, parse_with_inferred_vars, ParseError};
pub use polynomial::{default_var_names, Polynomial};
pub use weights::{find_quasihomogeneous_weights, weighted_degree, Weights};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("length mismatch: expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("weight {0} is outside the open interval (0, 1)")]
    WeightOutOfRange(String),
    #[error("polynomial has a constant or linear term")]
    HasLowOrderTerms,
}

/// `n` minus the rank of the Hessian of `f` at the origin.
pub fn hessian_corank(f: &Polynomial) -> Result<usize, PolyError> {
    if f.terms().any(|(m, _)| m.degree() <= 1) {
        return Err(PolyError::HasLowOrderTerms);
    }
    let n = f.nvars();
    Ok(n - f.hessian_at_origin().rank())
}

/// The partial derivatives `∂f/∂z_i`, in variable order.
pub fn jacobian_generators(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.nvars()).map(|i| f.derivative(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &["x", "y"]).unwrap()
    }

    #[test]
    fn corank_examples() {
        assert_eq!(hessian_corank(&p("x^2 + y^2")).unwrap(), 0);
        assert_eq!(hessian_corank(&p("x^3 + y^2")).unwrap(), 1);
        assert_eq!(hessian_corank(&p("x^3 + x*y^3")).unwrap(), 2);
        assert_eq!(hessian_corank(&p("x*y + x^3")).unwrap(), 0);
    }

    #[test]
    fn corank_rejects_linear_part() {
        assert_eq!(
            hessian_corank(&p("x + y^2")),
            Err(PolyError::HasLowOrderTerms)
        );
        assert_eq!(
            hessian_corank(&p("1 + y^2")),
            Err(PolyError::HasLowOrderTerms)
        );
    }

    #[test]
    fn corank_stable_under_fresh_square() {
        let g = parse_polynomial("x^3 + x*y^3 + z^2", &["x", "y", "z"]).unwrap();
        assert_eq!(
            hessian_corank(&p("x^3 + x*y^3")).unwrap(),
            hessian_corank(&g).unwrap()
        );
    }

    #[test]
    fn jacobian_examples() {
        assert_eq!(
            jacobian_generators(&p("x^3 + y^2")),
            vec![p("3*x^2"), p("2*y")]
        );
        assert_eq!(
            jacobian_generators(&p("x^2*y + y^3")),
            vec![p("2*x*y"), p("x^2 + 3*y^2")]
        );
        assert_eq!(jacobian_generators(&p("5")), vec![p("0"), p("0")]);
    }
}
