use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{Germ, SingularityError};
use crate::poly::{weighted_degree, Monomial, Weights};
use crate::Rational;

/// Sorted multiset of spectral numbers of a germ in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    values: Vec<Rational>,
    nvars: usize,
}

impl Spectrum {
    pub fn new(mut values: Vec<Rational>, nvars: usize) -> Self {
        values.sort();
        Self { values, nvars }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `{l} = {(n − 2) − l}` as multisets.
    pub fn is_symmetric(&self) -> bool {
        let c = Rational::from_integer(BigInt::from(self.nvars)) - Rational::from_integer(2.into());
        let mut mirrored: Vec<Rational> = self.values.iter().map(|l| &c - l).collect();
        mirrored.sort();
        mirrored == self.values
    }

    /// Every value in the open interval `(n/2 − 3/2, n/2 − 1/2)`.
    pub fn in_simple_interval(&self) -> bool {
        let half = Rational::new(1.into(), 2.into());
        let n_half = Rational::from_integer(BigInt::from(self.nvars)) * &half;
        let lo = &n_half - Rational::from_integer(1.into()) - &half;
        let hi = &n_half - &half;
        self.values.iter().all(|l| *l > lo && *l < hi)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn basis_degrees(g: &Germ, w: &Weights) -> Result<Vec<Rational>, SingularityError> {
    g.local_algebra()
        .basis
        .monomials()
        .iter()
        .map(|m| Ok(weighted_degree(m, w)?))
        .collect()
}

/// `{⟨k + 1, ν⟩ − 1}` over the monomial basis `z^k` of the local algebra.
pub fn spectrum_quasihomogeneous(g: &Germ) -> Result<Spectrum, SingularityError> {
    let w = g.require_weights()?;
    let shift = w.sum() - Rational::one();
    let values = basis_degrees(g, w)?
        .into_iter()
        .map(|d| d + &shift)
        .collect();
    Ok(Spectrum::new(values, g.nvars()))
}

/// Spectrum of `f + z_{n+1}² + ⋯ + z_{n+times}²`.
pub fn suspend_spectrum(s: &Spectrum, times: usize) -> Spectrum {
    let shift = Rational::new(BigInt::from(times), 2.into());
    Spectrum {
        values: s.values.iter().map(|v| v + &shift).collect(),
        nvars: s.nvars + times,
    }
}

/// `max − min`.
pub fn spectrum_length(s: &Spectrum) -> Result<Rational, SingularityError> {
    match (s.values.first(), s.values.last()) {
        (Some(lo), Some(hi)) => Ok(hi - lo),
        _ => Err(SingularityError::EmptySpectrum),
    }
}

pub fn is_simple(g: &Germ) -> Result<bool, SingularityError> {
    Ok(spectrum_length(&spectrum_quasihomogeneous(g)?)? < Rational::one())
}

/// Counts of positive, zero and negative directions of the intersection form
/// read off from the spectrum. `plus` and `minus` only mean something when
/// `zero` is 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub plus: usize,
    pub zero: usize,
    pub minus: usize,
}

pub fn signature_from_spectrum(s: &Spectrum) -> Signature {
    let mut sig = Signature {
        plus: 0,
        zero: 0,
        minus: 0,
    };
    for v in &s.values {
        if v.is_integer() {
            sig.zero += 1;
        } else if v.floor().to_integer().is_odd() {
            sig.plus += 1;
        } else {
            sig.minus += 1;
        }
    }
    sig
}

/// Fractional parts of the spectral numbers, sorted; the monodromy
/// eigenvalues are `exp(2πi·angle)`.
pub fn monodromy_eigenvalue_angles(s: &Spectrum) -> Vec<Rational> {
    let mut out: Vec<Rational> = s.values.iter().map(|v| v - v.floor()).collect();
    out.sort();
    out
}

/// Order of the monodromy operator: lcm of the denominators of the angles.
pub fn monodromy_order(s: &Spectrum) -> BigInt {
    s.values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Number of basis monomials of weighted degree at least 1.
pub fn modality_quasihomogeneous(g: &Germ) -> Result<usize, SingularityError> {
    let w = g.require_weights()?;
    Ok(basis_degrees(g, w)?
        .iter()
        .filter(|d| **d >= Rational::one())
        .count())
}

/// `Π (1/ν_i − 1)`.
pub fn milnor_number_from_weights(w: &Weights) -> Rational {
    w.values()
        .iter()
        .map(|nu| nu.recip() - Rational::one())
        .product()
}

/// Basis monomials of the local algebra with their weighted degrees.
pub fn weighted_basis(g: &Germ) -> Result<Vec<(Monomial, Rational)>, SingularityError> {
    let w = g.require_weights()?;
    let degs = basis_degrees(g, w)?;
    Ok(g.local_algebra()
        .basis
        .monomials()
        .iter()
        .cloned()
        .zip(degs)
        .collect())
}
