use std::fmt;

use num_traits::Signed;

use super::WeylError;
use crate::linalg::{sign_changes, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    Semidefinite,
    Indefinite,
}

impl fmt::Display for Definiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Definiteness::PositiveDefinite => "positive-definite",
            Definiteness::NegativeDefinite => "negative-definite",
            Definiteness::Semidefinite => "semidefinite",
            Definiteness::Indefinite => "indefinite",
        })
    }
}

/// Numbers of positive, negative and zero eigenvalues of a symmetric matrix.
///
/// The characteristic polynomial of a symmetric matrix is real-rooted, so
/// Descartes' rule of signs counts its positive roots exactly.
pub fn inertia(m: &RatMatrix) -> Result<(usize, usize, usize), WeylError> {
    if !m.is_symmetric() {
        return Err(WeylError::NotSymmetric);
    }
    let p = m.characteristic_polynomial();
    let zero = p
        .iter()
        .take_while(|c| num_traits::Zero::is_zero(*c))
        .count();
    let pos = sign_changes(&p);
    let reflected: Vec<_> = p
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
        .collect();
    let neg = sign_changes(&reflected);
    Ok((pos, neg, zero))
}

pub fn definiteness(m: &RatMatrix) -> Result<Definiteness, WeylError> {
    if !m.is_symmetric() {
        return Err(WeylError::NotSymmetric);
    }
    let minors = m.leading_principal_minors();
    if minors.iter().all(|d| d.is_positive()) {
        return Ok(Definiteness::PositiveDefinite);
    }
    if minors.iter().enumerate().all(|(k, d)| {
        if k % 2 == 0 {
            d.is_negative()
        } else {
            d.is_positive()
        }
    }) {
        return Ok(Definiteness::NegativeDefinite);
    }
    let (pos, neg, _) = inertia(m)?;
    Ok(match (pos, neg) {
        (p, 0) if p == m.nrows() => Definiteness::PositiveDefinite,
        (0, n) if n == m.nrows() => Definiteness::NegativeDefinite,
        (_, 0) | (0, _) => Definiteness::Semidefinite,
        _ => Definiteness::Indefinite,
    })
}
