use num_traits::One;

use super::{buchberger, normal_form, GrobnerError, GroebnerBasis, TermOrder};
use crate::poly::{jacobian_generators, Monomial, Polynomial};
use crate::Rational;

/// Standard monomials of a zero-dimensional quotient, in ascending graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Every divisor of a member is a member.
    pub fn is_division_closed(&self) -> bool {
        self.monomials.iter().all(|m| {
            (0..m.nvars()).all(|i| {
                if m.exponents()[i] == 0 {
                    return true;
                }
                let mut e = m.exponents().to_vec();
                e[i] -= 1;
                self.monomials.contains(&Monomial::new(e))
            })
        })
    }
}

/// Monomials outside the staircase of leading monomials of `gb`.
pub fn quotient_monomial_basis(gb: &GroebnerBasis) -> Result<QuotientBasis, GrobnerError> {
    let n = gb.nvars();
    let lms = gb.leading_monomials();
    if gb.is_unit_ideal() {
        return Ok(QuotientBasis { monomials: vec![] });
    }
    let mut bounds = Vec::with_capacity(n);
    for var in 0..n {
        let bound = lms
            .iter()
            .filter(|m| m.pure_power_var() == Some(var))
            .map(|m| m.exponents()[var])
            .min()
            .ok_or(GrobnerError::NotZeroDimensional { var })?;
        bounds.push(bound);
    }
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    'outer: loop {
        let m = Monomial::new(e.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        for i in 0..n {
            e[i] += 1;
            if e[i] < bounds[i] {
                continue 'outer;
            }
            e[i] = 0;
        }
        break;
    }
    out.sort();
    Ok(QuotientBasis { monomials: out })
}

/// A presentation of the local algebra `O_n / I_f` at the origin.
///
/// When the Jacobian ideal is primary to the maximal ideal, the global
/// quotient already is the local algebra. Otherwise `m^N` is added for the
/// first `N` at which `dim C[z]/(J + m^N)` stops growing; by Nakayama's lemma
/// that dimension is the local one.
#[derive(Clone, Debug)]
pub struct LocalAlgebra {
    pub gb: GroebnerBasis,
    pub basis: QuotientBasis,
    /// The `N` of the added power of the maximal ideal, if one was needed.
    pub truncation: Option<u32>,
    /// Dimension of the global quotient `C[z]/J`.
    pub global_dimension: usize,
}

impl LocalAlgebra {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

fn power_of_maximal_ideal(nvars: usize, degree: u32) -> Vec<Polynomial> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Polynomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Polynomial::monomial(
                Monomial::new(cur.clone()),
                Rational::one(),
            ));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        go(0, degree, &mut vec![0; nvars], &mut out);
    }
    out
}

/// Local algebra of the ideal generated by `gens` at the origin.
fn local_quotient(gens: &[Polynomial], nvars: usize) -> Result<LocalAlgebra, GrobnerError> {
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Err(GrobnerError::NonIsolated);
    }
    let order = TermOrder::graded_lex();
    let gb = buchberger(&gens, &order);
    let basis = quotient_monomial_basis(&gb).map_err(|_| GrobnerError::NonIsolated)?;
    let d = basis.len();
    let nilpotent = (0..nvars).all(|i| {
        let mut e = vec![0; nvars];
        e[i] = d as u32;
        gb.contains(&Polynomial::monomial(Monomial::new(e), Rational::one()))
    });
    if nilpotent {
        return Ok(LocalAlgebra {
            gb,
            basis,
            truncation: None,
            global_dimension: d,
        });
    }
    let truncated = |n: u32| -> Result<(GroebnerBasis, QuotientBasis), GrobnerError> {
        let mut all = gens.clone();
        all.extend(power_of_maximal_ideal(nvars, n));
        let gb = buchberger(&all, &order);
        let qb = quotient_monomial_basis(&gb)?;
        Ok((gb, qb))
    };
    // dim C[z]/(J + m^N) is nondecreasing in N and bounded by the global dimension
    let mut prev = truncated(1)?;
    for n in 1..=(d as u32 + 1) {
        let next = truncated(n + 1)?;
        if next.1.len() == prev.1.len() {
            return Ok(LocalAlgebra {
                gb: prev.0,
                basis: prev.1,
                truncation: Some(n),
                global_dimension: d,
            });
        }
        prev = next;
    }
    unreachable!("local dimension is bounded by the global dimension {d}")
}

/// Local algebra `Q_f` of the Jacobian ideal of `f` at the origin.
pub fn local_algebra(f: &Polynomial) -> Result<LocalAlgebra, GrobnerError> {
    local_quotient(&jacobian_generators(f), f.nvars())
}

/// Milnor number: dimension of the local algebra at the origin.
pub fn milnor_number(f: &Polynomial) -> Result<usize, GrobnerError> {
    local_algebra(f).map(|a| a.dimension())
}

/// Representative of `[f]` in `Q_f` as a combination of standard monomials.
pub fn class_in_local_algebra(f: &Polynomial) -> Result<Polynomial, GrobnerError> {
    let alg = local_algebra(f)?;
    Ok(normal_form(f, &alg.gb))
}
